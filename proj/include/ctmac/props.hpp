#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <ctmac/report.hpp>

namespace ctmac
{

// "mac", "symfunc", "cai", "keylemma", "vanish".
const std::vector<std::string> &suite_names();
// One report per property instance.  Random choices are drawn from the seed.
// Throws std::invalid_argument for an unknown suite.
std::vector<Report> run_suite(const std::string &name, std::uint64_t seed);

} // namespace ctmac
