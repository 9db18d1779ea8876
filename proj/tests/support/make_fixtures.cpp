// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include "fixtures.hpp"

#include <wce/image_io.hpp>

#include <cstdio>
#include <filesystem>

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <out-dir>\n", argv[0]);
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (std::uint64_t seed = 1; seed <= wce::testing::kFixtureCount; ++seed) {
        wce::save_image(wce::testing::synthetic_wce_fixture(seed), dir / wce::testing::fixture_name(seed));
    }
    return 0;
}
