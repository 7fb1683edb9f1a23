#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dirinv {

/// The universe P of admissible factors, a subset of {2, 3, ...}.
class FactorSet {
 public:
  enum class Kind { AllFrom2, OddFrom3, ExplicitFinite, PredicateTruncated };

  static FactorSet all_from_2();
  static FactorSet odd_from_3();
  /// Members are sorted and deduplicated; each must be >= 2.
  static FactorSet explicit_finite(std::vector<std::uint64_t> members);
  /// Membership is only defined up to `horizon`; callers working with n must
  /// have horizon >= n.
  static FactorSet predicate_truncated(std::function<bool(std::uint64_t)> predicate,
                                       std::uint64_t horizon, std::string label);

  /// "all2", "odd3", "list:2,3,5".
  static FactorSet parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool contains(std::uint64_t m) const;
  /// The least member (varrho).
  std::uint64_t min_element() const { return min_element_; }
  bool is_finite() const { return kind_ == Kind::ExplicitFinite; }
  const std::vector<std::uint64_t>& members() const { return members_; }
  std::uint64_t horizon() const { return horizon_; }
  const std::string& label() const { return label_; }

  /// Throws std::domain_error if membership at n is not defined.
  void require_defined_up_to(std::uint64_t n) const;

 private:
  FactorSet() = default;

  Kind kind_ = Kind::AllFrom2;
  std::uint64_t min_element_ = 2;
  std::vector<std::uint64_t> members_;
  std::shared_ptr<const std::function<bool(std::uint64_t)>> predicate_;
  std::uint64_t horizon_ = 0;
  std::string label_;
};

}  // namespace dirinv
