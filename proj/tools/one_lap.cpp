#include <iostream>

#include "onelap/cli.hpp"

int main(int argc, char** argv) {
  const onelap::ParseResult parsed = onelap::parse_config(argc, argv, std::cout, std::cerr);
  if (parsed.exit_code) return *parsed.exit_code;
  return onelap::run(parsed.config, std::cout, std::cerr);
}
