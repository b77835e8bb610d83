// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/commands.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return panfuse::app::run_cli(argc, argv, std::cout, std::cerr);
}
