#include "ndc/errors.hpp"
#include "ndc/scenario.hpp"

#include <exception>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const ndc::Scenario scenario = ndc::parse_invocation(args);
    const ndc::RunSummary summary = ndc::run_scenario(scenario);
    std::cout << summary.text();
    return 0;
  } catch (const ndc::HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const ndc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ndc::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ndc::IntegrationError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ndc::DegeneracyError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
