#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cli/command.hpp"

int main(int argc, char** argv) {
  using namespace cycle_span::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    std::string help;
    const Command cmd = parse_command(args, &help);
    if (!help.empty()) {
      std::cout << help;
      return 0;
    }
    const Report report = execute(cmd);
    const std::string text = render(report);
    if (cmd.output) {
      std::ofstream file(*cmd.output, std::ios::binary);
      if (!file) {
        std::cerr << "cycle-span: cannot open " << *cmd.output << " for writing\n";
        return 1;
      }
      file << text;
    } else {
      std::cout << text;
    }
    return report.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "cycle-span: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cycle-span: " << e.what() << '\n';
    return 1;
  }
}
