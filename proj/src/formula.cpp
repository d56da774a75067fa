#include "nwb/formula.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace nwb
{

struct Formula::Node
{
    Op op;
    std::string name;
    Formula a;
    Formula b;
    std::size_t hash = 0;
    std::size_t size = 1;
    int depth = 0;

    // Only used for the bottom singleton; children of leaves are never read.
    Node() : op{ Op::Bot }, a{ nullptr }, b{ nullptr } {}
    Node( Op o, std::string n, Formula x, Formula y )
            : op{ o }, name{ std::move( n ) }, a{ std::move( x ) }, b{ std::move( y ) }
    {}
};

namespace
{

std::size_t mix( std::size_t h, std::size_t v )
{
    return h ^ ( v + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 ) );
}

std::shared_ptr< Formula::Node > make_bot()
{
    auto n = std::make_shared< Formula::Node >();
    n->hash = mix( 0, static_cast< std::size_t >( Op::Bot ) );
    return n;
}

const std::shared_ptr< const Formula::Node >& bot_node()
{
    static const std::shared_ptr< const Formula::Node > node = make_bot();
    return node;
}

} // namespace

Formula::Formula() : _node{ bot_node() } {}

Formula Formula::bot() { return Formula{}; }

Formula Formula::top() { return neg( bot() ); }

Formula Formula::atom( std::string name )
{
    if ( name.empty() )
        throw std::invalid_argument( "atom name must be non-empty" );
    auto n = std::make_shared< Node >( Op::Atom, std::move( name ), Formula{}, Formula{} );
    n->hash = mix( mix( 0, static_cast< std::size_t >( Op::Atom ) ), std::hash< std::string >{}( n->name ) );
    return Formula{ std::move( n ) };
}

namespace
{

template< typename Node >
void finish_unary( Node& n, Op op )
{
    n.hash = mix( mix( 0, static_cast< std::size_t >( op ) ), n.a.hash() );
    n.size = 1 + n.a.size();
    n.depth = n.a.modal_depth() + ( op == Op::Box ? 1 : 0 );
}

template< typename Node >
void finish_binary( Node& n, Op op )
{
    n.hash = mix( mix( mix( 0, static_cast< std::size_t >( op ) ), n.a.hash() ), n.b.hash() );
    n.size = 1 + n.a.size() + n.b.size();
    n.depth = std::max( n.a.modal_depth(), n.b.modal_depth() );
}

} // namespace

Formula Formula::neg( Formula a )
{
    auto n = std::make_shared< Node >( Op::Not, std::string{}, std::move( a ), Formula{} );
    finish_unary( *n, Op::Not );
    return Formula{ std::move( n ) };
}

Formula Formula::box( Formula a )
{
    auto n = std::make_shared< Node >( Op::Box, std::string{}, std::move( a ), Formula{} );
    finish_unary( *n, Op::Box );
    return Formula{ std::move( n ) };
}

Formula Formula::conj( Formula a, Formula b )
{
    auto n = std::make_shared< Node >( Op::And, std::string{}, std::move( a ), std::move( b ) );
    finish_binary( *n, Op::And );
    return Formula{ std::move( n ) };
}

Formula Formula::disj( Formula a, Formula b )
{
    auto n = std::make_shared< Node >( Op::Or, std::string{}, std::move( a ), std::move( b ) );
    finish_binary( *n, Op::Or );
    return Formula{ std::move( n ) };
}

Formula Formula::imp( Formula a, Formula b )
{
    auto n = std::make_shared< Node >( Op::Imp, std::string{}, std::move( a ), std::move( b ) );
    finish_binary( *n, Op::Imp );
    return Formula{ std::move( n ) };
}

Formula Formula::iff( const Formula& a, const Formula& b ) { return conj( imp( a, b ), imp( b, a ) ); }

Op Formula::op() const { return _node->op; }

const std::string& Formula::name() const
{
    assert( op() == Op::Atom );
    return _node->name;
}

const Formula& Formula::child() const
{
    assert( is_unary( op() ) );
    return _node->a;
}

const Formula& Formula::lhs() const
{
    assert( is_binary( op() ) );
    return _node->a;
}

const Formula& Formula::rhs() const
{
    assert( is_binary( op() ) );
    return _node->b;
}

std::size_t Formula::hash() const { return _node->hash; }
std::size_t Formula::size() const { return _node->size; }
int Formula::modal_depth() const { return _node->depth; }

bool Formula::as_iff( Formula& a, Formula& b ) const
{
    if ( op() != Op::And || lhs().op() != Op::Imp || rhs().op() != Op::Imp )
        return false;
    const auto& l = lhs();
    const auto& r = rhs();
    if ( l.lhs() != r.rhs() || l.rhs() != r.lhs() )
        return false;
    a = l.lhs();
    b = l.rhs();
    return true;
}

bool operator==( const Formula& x, const Formula& y )
{
    if ( x._node == y._node )
        return true;
    if ( x.hash() != y.hash() || x.size() != y.size() || x.op() != y.op() )
        return false;
    switch ( x.op() )
    {
    case Op::Bot:
        return true;
    case Op::Atom:
        return x.name() == y.name();
    case Op::Not:
    case Op::Box:
        return x.child() == y.child();
    default:
        return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    }
}

std::vector< std::string > atoms_of( const Formula& f )
{
    std::vector< std::string > out;
    std::unordered_set< std::string > seen;
    auto walk = [ & ]( auto&& self, const Formula& g ) -> void {
        switch ( g.op() )
        {
        case Op::Bot:
            return;
        case Op::Atom:
            if ( seen.insert( g.name() ).second )
                out.push_back( g.name() );
            return;
        case Op::Not:
        case Op::Box:
            self( self, g.child() );
            return;
        default:
            self( self, g.lhs() );
            self( self, g.rhs() );
        }
    };
    walk( walk, f );
    return out;
}

bool occurs_in( const Formula& sub, const Formula& f )
{
    if ( sub.size() > f.size() )
        return false;
    if ( sub == f )
        return true;
    if ( is_unary( f.op() ) )
        return occurs_in( sub, f.child() );
    if ( is_binary( f.op() ) )
        return occurs_in( sub, f.lhs() ) || occurs_in( sub, f.rhs() );
    return false;
}

std::vector< Formula > subformulas( const Formula& f )
{
    std::vector< Formula > out;
    std::unordered_set< Formula, FormulaHash > seen;
    auto walk = [ & ]( auto&& self, const Formula& g ) -> void {
        if ( seen.count( g ) )
            return;
        if ( is_unary( g.op() ) )
            self( self, g.child() );
        else if ( is_binary( g.op() ) )
        {
            self( self, g.lhs() );
            self( self, g.rhs() );
        }
        seen.insert( g );
        out.push_back( g );
    };
    walk( walk, f );
    return out;
}

} // namespace nwb
