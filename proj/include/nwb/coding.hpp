#pragma once

// Gödel-style numbering of formulas.
//
// A formula is written in prefix (Polish) notation over a finite alphabet of
// K symbols numbered 1..K; atom names are spelled out character by character
// and closed by a terminator symbol.  The code of a formula is the value of
// that symbol string read as a bijective base-K numeral.
//
//   - injective, since prefix notation is uniquely readable;
//   - the image is decidable: decode() parses the digit string and rejects
//     anything that is not a well-formed formula (those numbers are gaps);
//   - a strict subformula has a strictly shorter symbol string, and in
//     bijective numeration every shorter string denotes a smaller number, so
//     subformulas always receive strictly smaller codes.
//
// Code order therefore coincides with shortlex order on symbol strings,
// which code_less() computes without big-integer arithmetic.
//
// Two alphabets are provided: the modal one (identifier atoms, box) and the
// toy one used by the sandbox (falsum, lam(i), identifier letters, and the
// provability marker pr(.) in place of the box).

#include "nwb/formula.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nwb
{

using Code = boost::multiprecision::cpp_int;

enum class Namespace : std::uint8_t
{
    Modal,
    Toy,
};

[[nodiscard]] unsigned alphabet_size( Namespace ns );

// Throws std::invalid_argument when an atom name is not expressible in the
// namespace (e.g. "lam(0)" or an identifier with illegal characters).
[[nodiscard]] std::vector< std::uint8_t > symbols( const Formula& f, Namespace ns = Namespace::Modal );
[[nodiscard]] std::size_t symbol_length( const Formula& f, Namespace ns = Namespace::Modal );

[[nodiscard]] Code godel_code( const Formula& f, Namespace ns = Namespace::Modal );
[[nodiscard]] std::optional< Formula > decode( const Code& n, Namespace ns = Namespace::Modal );

// Strict order by code.
[[nodiscard]] bool code_less( const Formula& a, const Formula& b, Namespace ns = Namespace::Modal );

struct CodeLess
{
    Namespace ns = Namespace::Modal;
    bool operator()( const Formula& a, const Formula& b ) const { return code_less( a, b, ns ); }
};

// All subformulas of f without duplicates, ascending by code; f is last.
[[nodiscard]] std::vector< Formula > subformula_closure( const Formula& f, Namespace ns = Namespace::Modal );

// Calls visit on every modal formula in increasing code order, up to the
// given symbol length, until visit returns false.
void for_each_in_code_order( std::size_t max_symbols, const std::function< bool( const Formula& ) >& visit );

// Whether name is a legal atom of the namespace.
[[nodiscard]] bool valid_atom_name( const std::string& name, Namespace ns );

[[nodiscard]] std::string to_string( const Code& c );
[[nodiscard]] Code code_from_string( const std::string& s ); // throws std::invalid_argument

} // namespace nwb
