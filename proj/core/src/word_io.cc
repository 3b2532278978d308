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

#include "attractorlab/word_io.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "attractorlab/error.h"

namespace attractorlab {
namespace {

constexpr std::string_view kAlphabetTag = "#alphabet:";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' ||
                        s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

}  // namespace

void write_words(std::ostream& out, const std::vector<Word>& words,
                 bool with_alphabet_line) {
  if (with_alphabet_line && !words.empty()) {
    Alphabet a = words.front().alphabet();
    for (const Word& w : words) a = a.merged_with(w.alphabet());
    out << kAlphabetTag << ' ' << a.symbols() << '\n';
  }
  for (const Word& w : words) out << w.str() << '\n';
}

std::vector<Word> read_words(std::istream& in) {
  std::vector<std::string> lines;
  std::optional<Alphabet> declared;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.substr(0, kAlphabetTag.size()) == kAlphabetTag) {
      if (declared || !lines.empty()) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) +
                        ": alphabet line must come first");
      }
      try {
        declared = Alphabet(trim(t.substr(kAlphabetTag.size())));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                           ": " + e.what());
      }
      continue;
    }
    lines.emplace_back(t);
  }
  Alphabet alphabet = declared ? *declared : [&] {
    std::string all;
    for (const auto& l : lines) all += l;
    return Alphabet::of(all);
  }();
  std::vector<Word> words;
  words.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      words.push_back(Word::from_string(lines[i], alphabet));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "word " + std::to_string(i + 1) + ": " +
                                         e.what());
    }
  }
  return words;
}

std::vector<Word> read_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_words(in);
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace attractorlab
