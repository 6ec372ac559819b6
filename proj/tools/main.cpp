// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return chainlens::cli::run_cli(argc, argv, std::cout, std::cerr);
}
