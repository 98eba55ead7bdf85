#pragma once

#include "winv/geometry.hpp"
#include "winv/rational.hpp"
#include "winv/session.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace winv {

enum class Space { P2, P1P1, Blowup, P3, P1Cubed };

// One invariant as asked for on the command line.  `involution` is empty for
// the complex invariant.
struct Query {
    Space space = Space::P2;
    std::string involution;
    Tuple degree;                         // d, or a,b, or d1,d2,d3
    Tuple a, b;                           // blowup multiplicities (complex: a only)
    std::vector<std::string> insertions;  // "3", "110", "21" depending on the space
    long pairs = 0;
};

Space parse_space(const std::string& name);
std::string space_name(Space s);

// throws UsageError on a malformed query; normalizes involution spellings
void validate(Query& q);

std::string canonical_key(const Query& q);
Rational evaluate(Session& s, const Query& q);
nlohmann::json to_json(const Query& q, const Rational& value);

}  // namespace winv
