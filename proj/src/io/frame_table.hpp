// Copyright 2026 the qpdft developers
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

#include <optional>
#include <string>
#include <vector>

namespace qpdft::io {

// ---------------------------------------------------------------------------
// Per-frame electron-transfer parameter tables.
//
// CSV with header "frame,delta_g_ev,lambda_ev[,h_da_ev,h_da_sq_ev2]".  Value
// columns other than the frame id are optional and may appear in any order;
// a column missing from the header is flagged absent rather than zero.
// Energies are in eV, couplings in eV and eV^2.
// ---------------------------------------------------------------------------
struct FrameRow {
  long long frame = 0;
  std::optional<double> delta_g_ev;
  std::optional<double> lambda_ev;
  std::optional<double> h_da_ev;
  std::optional<double> h_da_sq_ev2;
};

struct FrameTable {
  std::vector<FrameRow> rows;

  bool has_delta_g = false;
  bool has_lambda = false;
  bool has_h_da = false;
  bool has_h_da_sq = false;
};

/// Parse a frame table.  Throws Error(parse) with row numbers on malformed
/// cells, unknown columns, duplicate frame ids, or h_da_sq entries that
/// disagree with h_da^2 by more than 1e-6 relative.
FrameTable parse_frame_table(const std::string& text);

/// Emit a frame table in canonical column order with full precision.
std::string emit_frame_table(const FrameTable& table);

/// Merge two tables on frame id; a value present in both inputs must agree
/// within 1e-12 relative.  Used to join parameter and coupling tables.
FrameTable merge_frame_tables(const FrameTable& a, const FrameTable& b);

}  // namespace qpdft::io
