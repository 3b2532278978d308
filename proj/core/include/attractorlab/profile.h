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

#ifndef ATTRACTORLAB_PROFILE_H_
#define ATTRACTORLAB_PROFILE_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "attractorlab/attractor.h"
#include "attractorlab/generator_spec.h"
#include "attractorlab/word.h"

namespace attractorlab {

enum class Measure { kS, kSpan, kLm, kP, kA, kZ };

class MeasureSet {
 public:
  MeasureSet() = default;
  MeasureSet(std::initializer_list<Measure> measures);
  static MeasureSet all();
  /// Parses `s,span,lm,p,A,z`. Throws kParse.
  static MeasureSet parse(std::string_view text);

  bool has(Measure m) const noexcept { return bits_ & bit(m); }
  void add(Measure m) noexcept { bits_ |= bit(m); }
  std::string str() const;

 private:
  static unsigned bit(Measure m) { return 1u << static_cast<unsigned>(m); }
  unsigned bits_ = 0;
};

/// Which prefix lengths a profile samples.
class SampleGrid {
 public:
  enum class Kind { kDefault, kAll, kPow2, kList };

  SampleGrid() = default;
  static SampleGrid all() { return SampleGrid(Kind::kAll, {}); }
  static SampleGrid pow2() { return SampleGrid(Kind::kPow2, {}); }
  static SampleGrid list(std::vector<std::size_t> points);
  /// `all`, `pow2`, `default` or `list:1,2,3`. Throws kParse.
  static SampleGrid parse(std::string_view text);

  /// Ascending sample lengths in [1, n_max]. The default grid is every
  /// n <= 256 followed by the powers of two up to n_max.
  std::vector<std::size_t> points(std::size_t n_max) const;
  std::string str() const;

 private:
  SampleGrid(Kind kind, std::vector<std::size_t> list)
      : kind_(kind), list_(std::move(list)) {}

  Kind kind_ = Kind::kDefault;
  std::vector<std::size_t> list_;
};

struct ProfileRow {
  std::size_t n = 0;
  std::optional<std::size_t> s;
  std::optional<std::size_t> span;
  std::optional<std::size_t> lm;
  std::optional<std::size_t> p;  // p(query_length) on the prefix
  std::optional<std::size_t> A;  // A(query_length) on the prefix
  std::optional<std::size_t> z;
  std::vector<std::string> flags;  // e.g. "s:guard", "A:unsaturated"

  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

struct ProfileTable {
  std::string source;
  std::size_t query_length = 0;
  std::vector<ProfileRow> rows;  // ascending n

  friend bool operator==(const ProfileTable&, const ProfileTable&) = default;
};

struct ProfileOptions {
  MeasureSet measures = MeasureSet{Measure::kS, Measure::kSpan, Measure::kLm,
                                   Measure::kZ};
  SampleGrid grid;
  AttractorGuards guards;
  /// Factor length at which p and A are reported.
  std::size_t query_length = 4;
};

/// Measures of each sampled prefix of `spec`. Rows whose measure exceeds a
/// guard carry a flag instead of a value.
ProfileTable profile(const GeneratorSpec& spec, std::size_t n_max,
                     const ProfileOptions& options = {});
/// Same over prefixes of an explicit word; `source` names it in reports.
ProfileTable profile(const Word& word, std::string source, std::size_t n_max,
                     const ProfileOptions& options = {});

ProfileRow profile_row(const Word& prefix, const ProfileOptions& options);

// CSV: optional `# key: value` comment lines (source, query_length, seed),
// then the header `n,s,span,lm,p,A,z,flags`; absent values are empty and
// flags are joined with ';'.
void write_csv(std::ostream& out, const ProfileTable& table,
               std::optional<std::uint64_t> seed = {});
/// Throws kParse.
ProfileTable read_csv(std::istream& in);

/// One JSON object per row.
void write_jsonl(std::ostream& out, const ProfileTable& table,
                 std::optional<std::uint64_t> seed = {});

}  // namespace attractorlab

#endif  // ATTRACTORLAB_PROFILE_H_
