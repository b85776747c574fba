#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ginv/json_io.hpp"

namespace ginv {

enum class Family { All, DoubleStar, DLinked, General };

std::string to_string(Family f);
// "double-star", "d-linked", "general" or "all"; throws SpecViolation.
Family family_from_string(const std::string& s);

struct CampaignOptions {
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  Family family = Family::All;
};

struct CampaignFailure {
  std::size_t case_index = 0;
  std::uint64_t case_seed = 0;
  std::string family;
  std::string check;
  io::Json input;
  std::string expected;
  std::string got;
};

struct CampaignReport {
  std::size_t cases_run = 0;
  std::vector<CampaignFailure> failures;  // sorted by case index
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

// Randomized cross-validation of closed forms against the general
// algorithms. Case i draws from derive_seed(seed, i), so a report depends
// only on the options.
CampaignReport run_campaign(const CampaignOptions& opts);

// Single-case entry points, also used by the acceptance suite.
std::vector<CampaignFailure> check_double_star_case(const DoubleStarSpec& spec,
                                                    DoubleStarTag expected);
std::vector<CampaignFailure> check_d_linked_case(const DLinkedSpec& spec);
std::vector<CampaignFailure> check_general_case(const ExactMatrix& a,
                                                std::uint64_t seed);

// The elapsed time is left out unless asked for, so equal options give
// byte-identical output.
io::Json campaign_to_json(const CampaignReport& r, const CampaignOptions& opts,
                          bool include_timing = false);

}  // namespace ginv
