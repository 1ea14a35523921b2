#include "qnrnp/cli.hpp"

int main(int argc, char** argv) {
    return qnrnp::cli::run(argc, argv);
}
