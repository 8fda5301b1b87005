#include <iostream>

#include <treekit/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    treekit::CliResult r = treekit::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
