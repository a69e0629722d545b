#ifndef SEMIENDS_SPEC_IO_HPP_
#define SEMIENDS_SPEC_IO_HPP_

#include <string>

#include "semiends/models.hpp"

namespace semiends::cayley {
class CayleyBall;
}

namespace semiends::spec_io {

//! Parses a spec document (JSON). The "kind" field selects the variant:
//! presented, commutative_monoid, int_lattice, grid_flag, rees_matrix,
//! product, dual, finite_table. Errors name the offending field.
models::SpecPtr parse_spec(const std::string& text);

//! Serializes a spec back to its document form. parse_spec is a left
//! inverse of this up to byte equality.
std::string spec_to_json(const models::SemigroupSpec& spec, int indent = 2);

//! {vertices, edges, interior, radius, spec} with the spec echoed so the
//! document is self-contained. Byte-deterministic.
std::string graph_to_json(const cayley::CayleyBall& ball);

//! "base=<word>;prefix=<word>;period=<word>;kind=ray|antiray", words over
//! the generator names of the spec the literal is aimed at. kind defaults
//! to ray; base and prefix default to the empty word.
struct RayLiteral {
  words::Word base;
  words::Word prefix;
  words::Word period;
  bool anti = false;
};

RayLiteral parse_ray_literal(const std::string& text,
                             const words::Alphabet& names);
std::string format_ray_literal(const RayLiteral& ray,
                               const words::Alphabet& names);

//! Parses an element from its canonical serialization (the format the
//! library prints): words for presented specs, "(1,0)" tuples, "(x,y;f)"
//! grid elements, "(i|g|l)" Rees triples, "<x,y>" pairs, table names.
models::Element parse_element(const models::SemigroupSpec& spec,
                              const std::string& text);

}  // namespace semiends::spec_io

#endif  // SEMIENDS_SPEC_IO_HPP_
