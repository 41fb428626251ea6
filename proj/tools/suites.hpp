#pragma once

// Exhaustive property suites behind `asmgyr verify`.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmgyr/enumeration.hpp"
#include "asmgyr/grid.hpp"

namespace asmgyr::cli {

struct SuiteResult {
    std::string suite;
    int n = 0;
    bool pass = true;
    /// Check name -> number of instances checked.
    std::map<std::string, std::uint64_t> checks;
    /// First failing ASM in enumeration order, with the failed check.
    std::optional<Asm> counterexample;
    std::string failure;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite, CapExceeded when A_n
/// is over the cap.
SuiteResult run_suite(std::string_view suite, int n, int workers = 1, std::uint64_t cap = kDefaultCap);

}  // namespace asmgyr::cli
