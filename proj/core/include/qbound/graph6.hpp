// Copyright 2026 The qbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qbound/graph.hpp"

namespace qbound {

/// Decodes one graph6 line. A trailing newline and an optional ">>graph6<<"
/// header are accepted. Throws Error on a malformed length, a byte outside
/// [63, 126], or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes `g` without a trailing newline.
std::string write_graph6(const Graph& g);

/// Reads every non-blank line of a graph6 stream. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Writes one LF-terminated line per graph.
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace qbound
