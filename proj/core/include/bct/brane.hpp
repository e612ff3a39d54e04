#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bct/matrix.hpp"

namespace bct {

enum class Fivebrane { ns5, d5 };  // '/' and '\' in the text form

enum class HwDirection { forward, backward };

// Alternating NS5/D5 fivebranes with D3 multiplicities between consecutive
// ones; the two boundary D3 branes carry dimension 0 implicitly. Zero
// internal dimensions are admitted as transient Hanany-Witten intermediate
// states and reported by conformant().
struct BraneDiagram {
  std::vector<Fivebrane> fivebranes;
  std::vector<int> d3_dims;  // size fivebranes.size() - 1

  int fivebrane_count() const { return static_cast<int>(fivebranes.size()); }
  int ns5_count() const;
  int d5_count() const;
  // Positions (indices into fivebranes) of the NS5 / D5 branes, left to right.
  std::vector<int> ns5_positions() const;
  std::vector<int> d5_positions() const;
  int dim_left_of(int fb) const;   // 0 at the left boundary
  int dim_right_of(int fb) const;  // 0 at the right boundary
  bool conformant() const;         // all internal D3 dimensions positive

  friend bool operator==(const BraneDiagram&, const BraneDiagram&) = default;
};

// A set of (ns5, d5) index pairs, 0-based here and 1-based on the wire; each
// pair occurs at most once and every D3 brane must be straddled exactly as
// many times as its multiplicity.
struct TieDiagram {
  std::vector<std::pair<int, int>> ties;  // sorted ascending

  friend bool operator==(const TieDiagram&, const TieDiagram&) = default;
  friend auto operator<=>(const TieDiagram&, const TieDiagram&) = default;
};

// Compact text form: '/' = NS5, '\' = D5, decimal dimensions between
// consecutive fivebranes, nothing before the first or after the last.
BraneDiagram parse_diagram(std::string_view text);
std::string format_diagram(const BraneDiagram& diagram);

// NS5 charges (left dimension difference plus D5 branes to the left) as r,
// D5 charges (right dimension difference plus NS5 branes to the right) as c.
MarginPair charges(const BraneDiagram& diagram);

// Local surgery on the adjacent fivebrane pair starting at `position`:
// forward turns NS5-D5 into D5-NS5, backward the reverse; the dimension
// between them becomes d_left + d_right - d_mid + 1. Charges are preserved.
// Throws on pattern mismatch or a negative resulting dimension.
BraneDiagram hw_step(const BraneDiagram& diagram, int position, HwDirection direction);

// All NS5 branes left of all D5 branes, or the reverse.
bool is_separated(const BraneDiagram& diagram);
bool is_co_separated(const BraneDiagram& diagram);

// The separated representative of the Hanany-Witten class with the given
// charges: NS5 prefix sums of r, then D5 suffix sums of c.
BraneDiagram separated_diagram(const MarginPair& margins);

bool is_valid_tie_diagram(const BraneDiagram& diagram, const TieDiagram& ties);

// All tie diagrams, in ascending lexicographic order of their sorted pair
// lists.
std::vector<TieDiagram> enumerate_tie_diagrams(const BraneDiagram& diagram);

// Entry (z, a) is 1 iff the pair is a tie and the NS5 sits left of the D5,
// or the pair is not a tie and the NS5 sits right of the D5.
BinaryMatrix tie_to_bct(const BraneDiagram& diagram, const TieDiagram& ties);
TieDiagram bct_to_tie(const BraneDiagram& diagram, const BinaryMatrix& m);

}  // namespace bct
