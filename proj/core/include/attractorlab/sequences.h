// Copyright 2026 The AttractorLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ATTRACTORLAB_SEQUENCES_H_
#define ATTRACTORLAB_SEQUENCES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace attractorlab {

/// Integer sequence given by a finite head and an optional block repeated
/// forever after it. Written `1,2,(3,4)` for 1,2,3,4,3,4,...
class EventuallyPeriodic {
 public:
  EventuallyPeriodic() = default;
  EventuallyPeriodic(std::vector<std::uint64_t> head,
                     std::vector<std::uint64_t> tail);

  /// Parses `d0,d1,...[,(t0,t1,...)]`. Throws kParse.
  static EventuallyPeriodic parse(std::string_view text);

  const std::vector<std::uint64_t>& head() const noexcept { return head_; }
  const std::vector<std::uint64_t>& tail() const noexcept { return tail_; }
  bool infinite() const noexcept { return !tail_.empty(); }

  /// Number of available entries; nullopt when infinite.
  std::optional<std::size_t> length() const noexcept;
  bool has(std::size_t i) const noexcept;
  /// Throws kSequenceExhausted past the end of a finite sequence.
  std::uint64_t at(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const EventuallyPeriodic&,
                         const EventuallyPeriodic&) = default;

 private:
  std::vector<std::uint64_t> head_;
  std::vector<std::uint64_t> tail_;
};

/// Directive sequence (d_0, d_1, ...) of a characteristic Sturmian word:
/// d_0 >= 0 and d_i > 0 for i > 0.
class DirectiveSequence {
 public:
  /// Throws kInvalidSequence when the constraints above are violated.
  explicit DirectiveSequence(EventuallyPeriodic entries);
  static DirectiveSequence parse(std::string_view text);

  const EventuallyPeriodic& entries() const noexcept { return entries_; }
  bool has(std::size_t i) const noexcept { return entries_.has(i); }
  /// Throws kDirectiveExhausted past the end.
  std::uint64_t at(std::size_t i) const;
  std::string str() const { return entries_.str(); }

  friend bool operator==(const DirectiveSequence&,
                         const DirectiveSequence&) = default;

 private:
  EventuallyPeriodic entries_;
};

/// Sequence of positive integers, optionally required to increase strictly.
class IntSequence {
 public:
  explicit IntSequence(EventuallyPeriodic entries, bool strict = true);
  static IntSequence parse(std::string_view text, bool strict = true);

  const EventuallyPeriodic& entries() const noexcept { return entries_; }
  bool strict() const noexcept { return strict_; }
  bool has(std::size_t i) const noexcept { return entries_.has(i); }
  std::uint64_t at(std::size_t i) const;
  std::string str() const { return entries_.str(); }

 private:
  EventuallyPeriodic entries_;
  bool strict_;
};

inline constexpr char kToeplitzHole = '?';

/// Pattern over Σ ∪ {?} with at least one hole and one letter.
class ToeplitzPattern {
 public:
  /// Throws kInvalidPattern.
  explicit ToeplitzPattern(std::string_view pattern);

  const std::string& str() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }
  std::size_t hole_count() const noexcept { return holes_; }
  bool is_hole(std::size_t i) const { return pattern_[i] == kToeplitzHole; }
  char operator[](std::size_t i) const { return pattern_[i]; }

 private:
  std::string pattern_;
  std::size_t holes_ = 0;
};

}  // namespace attractorlab

#endif  // ATTRACTORLAB_SEQUENCES_H_
