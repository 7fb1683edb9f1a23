#include "dirinv/factor_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dirinv {

FactorSet FactorSet::all_from_2() {
  FactorSet s;
  s.kind_ = Kind::AllFrom2;
  s.min_element_ = 2;
  s.label_ = "all2";
  return s;
}

FactorSet FactorSet::odd_from_3() {
  FactorSet s;
  s.kind_ = Kind::OddFrom3;
  s.min_element_ = 3;
  s.label_ = "odd3";
  return s;
}

FactorSet FactorSet::explicit_finite(std::vector<std::uint64_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw std::invalid_argument("factor set must be non-empty");
  if (members.front() < 2) throw std::invalid_argument("factor set members must be >= 2");
  FactorSet s;
  s.kind_ = Kind::ExplicitFinite;
  s.min_element_ = members.front();
  std::ostringstream label;
  label << "list:";
  for (std::size_t i = 0; i < members.size(); ++i) label << (i ? "," : "") << members[i];
  s.label_ = label.str();
  s.members_ = std::move(members);
  return s;
}

FactorSet FactorSet::predicate_truncated(std::function<bool(std::uint64_t)> predicate,
                                         std::uint64_t horizon, std::string label) {
  FactorSet s;
  s.kind_ = Kind::PredicateTruncated;
  s.horizon_ = horizon;
  s.label_ = std::move(label);
  s.min_element_ = 0;
  for (std::uint64_t m = 2; m <= horizon; ++m) {
    if (predicate(m)) {
      s.min_element_ = m;
      break;
    }
  }
  if (s.min_element_ == 0) {
    throw std::invalid_argument("predicate factor set has no member up to its horizon");
  }
  s.predicate_ = std::make_shared<const std::function<bool(std::uint64_t)>>(std::move(predicate));
  return s;
}

FactorSet FactorSet::parse(const std::string& text) {
  if (text == "all2") return all_from_2();
  if (text == "odd3") return odd_from_3();
  if (text.rfind("list:", 0) == 0) {
    std::vector<std::uint64_t> members;
    std::stringstream in(text.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) {
        throw std::invalid_argument("bad factor set member '" + item + "'");
      }
      members.push_back(v);
    }
    return explicit_finite(std::move(members));
  }
  throw std::invalid_argument("unknown factor set '" + text + "' (expected all2, odd3, list:a,b,...)");
}

bool FactorSet::contains(std::uint64_t m) const {
  if (m < 2) return false;
  switch (kind_) {
    case Kind::AllFrom2:
      return true;
    case Kind::OddFrom3:
      return m % 2 == 1;
    case Kind::ExplicitFinite:
      return std::binary_search(members_.begin(), members_.end(), m);
    case Kind::PredicateTruncated:
      require_defined_up_to(m);
      return (*predicate_)(m);
  }
  return false;
}

void FactorSet::require_defined_up_to(std::uint64_t n) const {
  if (kind_ == Kind::PredicateTruncated && n > horizon_) {
    throw std::domain_error("factor set '" + label_ + "' is only defined up to " +
                            std::to_string(horizon_) + ", requested " + std::to_string(n));
  }
}

}  // namespace dirinv
