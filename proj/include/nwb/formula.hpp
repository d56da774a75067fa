#pragma once

// Modal formulas over bottom, atoms, the boolean connectives and a single
// unary modality.  Formulas are immutable, hash-consed by structure only
// (no interning table), and cheap to copy.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace nwb
{

enum class Op : std::uint8_t
{
    Bot,
    Atom,
    Not,
    And,
    Or,
    Imp,
    Box,
};

[[nodiscard]] constexpr bool is_binary( Op op ) { return op == Op::And || op == Op::Or || op == Op::Imp; }
[[nodiscard]] constexpr bool is_unary( Op op ) { return op == Op::Not || op == Op::Box; }

class Formula
{
public:
    struct Node; // opaque

private:
    std::shared_ptr< const Node > _node;

    explicit Formula( std::shared_ptr< const Node > node ) : _node{ std::move( node ) } {}
    friend struct Node;

public:
    // Default-constructed formula is bottom.
    Formula();

    static Formula bot();
    static Formula top(); // ~false
    static Formula atom( std::string name );
    static Formula neg( Formula a );
    static Formula conj( Formula a, Formula b );
    static Formula disj( Formula a, Formula b );
    static Formula imp( Formula a, Formula b );
    static Formula box( Formula a );
    // (a -> b) & (b -> a); there is no primitive biconditional.
    static Formula iff( const Formula& a, const Formula& b );

    [[nodiscard]] Op op() const;
    [[nodiscard]] const std::string& name() const;  // atoms only
    [[nodiscard]] const Formula& child() const;     // unary only
    [[nodiscard]] const Formula& lhs() const;       // binary only
    [[nodiscard]] const Formula& rhs() const;       // binary only

    [[nodiscard]] std::size_t hash() const;
    // Number of AST nodes.
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] int modal_depth() const;

    [[nodiscard]] bool is( Op o ) const { return op() == o; }
    // Matches (a -> b) & (b -> a) and returns {a, b}.
    [[nodiscard]] bool as_iff( Formula& a, Formula& b ) const;

    friend bool operator==( const Formula& a, const Formula& b );
    friend bool operator!=( const Formula& a, const Formula& b ) { return !( a == b ); }
};

struct FormulaHash
{
    std::size_t operator()( const Formula& f ) const { return f.hash(); }
};

// Atom names in order of first occurrence, without duplicates.
std::vector< std::string > atoms_of( const Formula& f );

// True when sub occurs in f (f itself included).
bool occurs_in( const Formula& sub, const Formula& f );

// Subformulas of f, duplicates removed, in post-order of first visit.
std::vector< Formula > subformulas( const Formula& f );

} // namespace nwb

template<>
struct std::hash< nwb::Formula >
{
    std::size_t operator()( const nwb::Formula& f ) const noexcept { return f.hash(); }
};
