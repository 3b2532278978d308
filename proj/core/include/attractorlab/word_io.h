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

#ifndef ATTRACTORLAB_WORD_IO_H_
#define ATTRACTORLAB_WORD_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "attractorlab/word.h"

namespace attractorlab {

// Word files are UTF-8 text with one word per line and an optional first
// line `#alphabet: <symbols>`.

void write_words(std::ostream& out, const std::vector<Word>& words,
                 bool with_alphabet_line = true);

/// Throws kParse on a symbol outside the declared alphabet.
std::vector<Word> read_words(std::istream& in);
std::vector<Word> read_word_file(const std::string& path);

/// FNV-1a 64-bit digest of the file bytes, hex encoded.
std::string content_hash(const std::string& bytes);

}  // namespace attractorlab

#endif  // ATTRACTORLAB_WORD_IO_H_
