#ifndef GORLINK_PARSER_HPP
#define GORLINK_PARSER_HPP

#include <string>
#include <utility>
#include <vector>

#include "gorlink/ideal.hpp"

namespace gorlink {

/// Parsed input document: a field and ring declaration followed by
/// named polynomial and ideal definitions. All polynomials are
/// homogeneous (enforced after parsing).
struct InputDocument {
    Field field;
    RingPtr ring;
    std::vector<std::pair<std::string, Polynomial>> polys;
    std::vector<std::pair<std::string, Ideal>> ideals;

    const Polynomial* find_poly(const std::string& name) const;
    const Ideal* find_ideal(const std::string& name) const;

    /// Canonical text form; parses back to an equal document.
    std::string render() const;
};

/// Grammar: statements separated by ';' or newlines.
///   field rational | field gf <p>
///   ring <name> ...
///   degrees <w> ...          (optional, directly after ring)
///   poly <name> = <expr>
///   ideal <name> = <expr>, <expr>, ...
/// Expressions use + - * ^ with integer literals, declared variables
/// and parentheses; '*' may be omitted (juxtaposition).
InputDocument parse_input(const std::string& text);

/// Expression parser for a single polynomial over a known ring.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

} // namespace gorlink

#endif
