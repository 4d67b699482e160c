#pragma once

// Regression table of published values, re-derived on every run.

#include <string>
#include <vector>

#include "fieldbound/campaigns.hpp"

namespace fieldbound {

enum class ItemStatus { Pass, BorderlinePass, Fail };

std::string status_label(ItemStatus status);

struct ExpectationItem {
  std::string id;
  std::string expected;
  std::string observed;
  ItemStatus status = ItemStatus::Fail;
  std::string note;
};

/// Evaluates every item. Items that decide on a single margin become
/// BorderlinePass when that margin is within epsilon of zero.
std::vector<ExpectationItem> run_expectations(const ScanConfig& config);

}  // namespace fieldbound
