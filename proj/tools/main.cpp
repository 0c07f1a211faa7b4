#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = nilharm::cli::run(args);
  if (r.json) {
    std::cout << nilharm::cli::dump(r.payload) << "\n";
    if (r.status == nilharm::cli::Status::error) std::cerr << r.human_text;
  } else if (r.status == nilharm::cli::Status::error) {
    std::cerr << r.human_text;
  } else {
    std::cout << r.human_text;
  }
  return nilharm::cli::exit_code(r.status);
}
