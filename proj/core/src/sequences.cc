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

#include "attractorlab/sequences.h"

#include <charconv>

#include "attractorlab/error.h"

namespace attractorlab {
namespace {

std::uint64_t parse_number(std::string_view token, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "bad integer '" + std::string(token) +
                                       "' in \"" + std::string(whole) + "\"");
  }
  return value;
}

std::vector<std::uint64_t> parse_list(std::string_view text,
                                      std::string_view whole) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    out.push_back(parse_number(token, whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

EventuallyPeriodic::EventuallyPeriodic(std::vector<std::uint64_t> head,
                                       std::vector<std::uint64_t> tail)
    : head_(std::move(head)), tail_(std::move(tail)) {}

EventuallyPeriodic EventuallyPeriodic::parse(std::string_view text) {
  std::string_view whole = text;
  std::vector<std::uint64_t> tail;
  std::size_t open = text.find('(');
  if (open != std::string_view::npos) {
    if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "tail block must be a single trailing '(...)' in \"" +
                      std::string(whole) + "\"");
    }
    tail = parse_list(text.substr(open + 1, text.size() - open - 2), whole);
    if (tail.empty()) {
      throw Error(ErrorCode::kParse,
                  "empty tail block in \"" + std::string(whole) + "\"");
    }
    text = text.substr(0, open);
    if (!text.empty()) {
      if (text.back() != ',') {
        throw Error(ErrorCode::kParse, "expected ',' before '(' in \"" +
                                           std::string(whole) + "\"");
      }
      text.remove_suffix(1);
    }
  }
  return EventuallyPeriodic(parse_list(text, whole), std::move(tail));
}

std::optional<std::size_t> EventuallyPeriodic::length() const noexcept {
  if (infinite()) return std::nullopt;
  return head_.size();
}

bool EventuallyPeriodic::has(std::size_t i) const noexcept {
  return infinite() || i < head_.size();
}

std::uint64_t EventuallyPeriodic::at(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  if (!infinite()) {
    throw Error(ErrorCode::kSequenceExhausted,
                "sequence has only " + std::to_string(head_.size()) +
                    " entries, entry " + std::to_string(i) + " requested");
  }
  return tail_[(i - head_.size()) % tail_.size()];
}

std::string EventuallyPeriodic::str() const {
  std::string out;
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(head_[i]);
  }
  if (infinite()) {
    if (!head_.empty()) out += ',';
    out += '(';
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(tail_[i]);
    }
    out += ')';
  }
  return out;
}

DirectiveSequence::DirectiveSequence(EventuallyPeriodic entries)
    : entries_(std::move(entries)) {
  const auto& head = entries_.head();
  for (std::size_t i = 1; i < head.size(); ++i) {
    if (head[i] == 0) {
      throw Error(ErrorCode::kInvalidSequence,
                  "directive entry d_" + std::to_string(i) + " must be > 0");
    }
  }
  for (std::size_t i = 0; i < entries_.tail().size(); ++i) {
    // Tail entries repeat at indices > 0.
    if (entries_.tail()[i] == 0) {
      throw Error(ErrorCode::kInvalidSequence,
                  "directive tail entries must be > 0");
    }
  }
}

DirectiveSequence DirectiveSequence::parse(std::string_view text) {
  return DirectiveSequence(EventuallyPeriodic::parse(text));
}

std::uint64_t DirectiveSequence::at(std::size_t i) const {
  if (!entries_.has(i)) {
    throw Error(ErrorCode::kDirectiveExhausted,
                "directive sequence " + str() + " has no entry d_" +
                    std::to_string(i));
  }
  return entries_.at(i);
}

IntSequence::IntSequence(EventuallyPeriodic entries, bool strict)
    : entries_(std::move(entries)), strict_(strict) {
  auto check = [](std::uint64_t v) {
    if (v == 0) {
      throw Error(ErrorCode::kInvalidSequence,
                  "sequence entries must be positive");
    }
  };
  for (auto v : entries_.head()) check(v);
  for (auto v : entries_.tail()) check(v);
  if (strict_) {
    const auto& head = entries_.head();
    for (std::size_t i = 1; i < head.size(); ++i) {
      if (head[i] <= head[i - 1]) {
        throw Error(ErrorCode::kInvalidSequence,
                    "sequence " + entries_.str() + " is not strictly increasing");
      }
    }
    if (entries_.infinite()) {
      throw Error(ErrorCode::kInvalidSequence,
                  "a periodic tail cannot increase strictly");
    }
  }
}

IntSequence IntSequence::parse(std::string_view text, bool strict) {
  return IntSequence(EventuallyPeriodic::parse(text), strict);
}

std::uint64_t IntSequence::at(std::size_t i) const { return entries_.at(i); }

ToeplitzPattern::ToeplitzPattern(std::string_view pattern) : pattern_(pattern) {
  for (char c : pattern_) {
    if (c == kToeplitzHole) ++holes_;
  }
  if (holes_ == 0) {
    throw Error(ErrorCode::kInvalidPattern,
                "Toeplitz pattern \"" + pattern_ + "\" has no hole");
  }
  if (holes_ == pattern_.size()) {
    throw Error(ErrorCode::kInvalidPattern,
                "Toeplitz pattern \"" + pattern_ +
                    "\" is all holes and never converges");
  }
}

}  // namespace attractorlab
