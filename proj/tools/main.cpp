#include "cli.hpp"

int main(int argc, char** argv)
{
    return schoenberg::cli::run_cli(argc, argv);
}
