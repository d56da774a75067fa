#pragma once

#include "nwb/coding.hpp"
#include "nwb/formula.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace nwb
{

class ParseError : public std::runtime_error
{
public:
    ParseError( const std::string& what, std::size_t pos )
            : std::runtime_error( what + " at offset " + std::to_string( pos ) ), _pos{ pos }
    {}

    // Zero-based byte offset into the input.
    [[nodiscard]] std::size_t position() const { return _pos; }

private:
    std::size_t _pos;
};

// Modal grammar:
//   fml := false | true | ident | ~fml | fml & fml | fml | fml | fml -> fml
//        | fml <-> fml | [] fml | ( fml )
// Binding, tightest first: ~ [] , & , | , -> (right), <->.
// With Namespace::Toy the atoms falsum and lam(i) are accepted and pr(fml)
// denotes the provability marker (stored as a Box node).
[[nodiscard]] Formula parse( std::string_view text, Namespace ns = Namespace::Modal );

// Minimal-parenthesis rendering; parse(render(f)) == f.
[[nodiscard]] std::string render( const Formula& f, Namespace ns = Namespace::Modal );

} // namespace nwb
