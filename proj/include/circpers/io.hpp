// Text formats for complexes, maps, cocycles and representations; JSON and
// SVG report emission.

#ifndef CIRCPERS_IO_HPP
#define CIRCPERS_IO_HPP

#include <map>
#include <string>

#include "circpers/cocycle.hpp"
#include "circpers/complex.hpp"
#include "circpers/invariants.hpp"
#include "circpers/quiver.hpp"

namespace circpers {

/// Reads a whole file; InputError if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// One maximal simplex per line; '#' starts a comment. `source` names the
/// input in error messages.
SimplicialComplex parse_complex(const std::string& text, const std::string& source = "complex");
/// Lines "v p/q" and optional "e u v p/q".
PLCircleMap parse_map(const std::string& text, const SimplicialComplex& k, const std::string& source = "map",
                      std::vector<std::string>* warnings = nullptr);
/// Lines "u v p/q".
OneCocycle parse_cocycle(const std::string& text, const SimplicialComplex& k, const std::string& source = "cocycle");
/// Blocks "[dim r]" "m M field SPEC" "dims n1 d1 ..." followed by the entries
/// of alpha_1..alpha_m then beta_1..beta_m, row by row. Without "dim" lines
/// the single block is dimension 0.
std::map<int, CyclicQuiverRep> parse_representations(const std::string& text, const std::string& source = "rep");

std::string complex_text(const SimplicialComplex& k);
std::string map_text(const PLCircleMap& map);
std::string cocycle_text(const OneCocycle& c);
std::string representation_text(const std::map<int, CyclicQuiverRep>& reps);

/// Deterministic: sorted keys, fractions as "p/q".
std::string report_json(const InvariantsReport& report);
/// One spiral per bar plus a table of Jordan cells.
std::string report_svg(const InvariantsReport& report);

}  // namespace circpers

#endif  // CIRCPERS_IO_HPP
