#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzv/real.hpp"

namespace mzv::cli {

struct CheckRow {
  std::string identity;
  std::string lhs;
  std::string rhs;
  std::string difference;
  bool pass = false;
};

inline constexpr const char* kSuiteNames[] = {"reflection2", "reflection3", "renorm-ones", "det-trace"};

std::vector<CheckRow> run_suite(const std::string& name, const PrecisionContext& ctx);

// Every published number this tool reproduces, checked against its printed
// value or closed form.
std::vector<CheckRow> run_repro(const PrecisionContext& ctx);

inline constexpr std::uint32_t kDetTraceSeed = 20260611;

}  // namespace mzv::cli
