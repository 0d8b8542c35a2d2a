#include <thetaid/cli.hpp>

int main(int argc, char **argv)
{
    return thetaid::cli::run(argc, argv);
}
