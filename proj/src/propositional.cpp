#include "nwb/propositional.hpp"

#include <algorithm>

namespace nwb
{

PropSolver::PropSolver()
{
    _assign.push_back( -1 ); // var 0 unused
    _watches.resize( 2 );
    _false = 2 * new_var();
    _units.push_back( _false ^ 1 );
}

int PropSolver::new_var()
{
    _assign.push_back( -1 );
    _watches.resize( 2 * _assign.size() );
    return static_cast< int >( _assign.size() ) - 1;
}

void PropSolver::add_clause( std::vector< Lit > c )
{
    std::sort( c.begin(), c.end() );
    c.erase( std::unique( c.begin(), c.end() ), c.end() );
    for ( std::size_t i = 1; i < c.size(); ++i )
        if ( ( c[ i ] ^ 1 ) == c[ i - 1 ] )
            return; // contains l and ~l
    if ( c.empty() )
    {
        _broken = true;
        return;
    }
    if ( c.size() == 1 )
    {
        _units.push_back( c[ 0 ] );
        return;
    }
    int idx = static_cast< int >( _clauses.size() );
    _watches[ c[ 0 ] ].push_back( idx );
    _watches[ c[ 1 ] ].push_back( idx );
    _clauses.push_back( std::move( c ) );
}

PropSolver::Lit PropSolver::encode( const Formula& f )
{
    switch ( f.op() )
    {
    case Op::Bot:
        return _false;
    case Op::Not:
        return encode( f.child() ) ^ 1;
    default:
        break;
    }
    if ( auto it = _memo.find( f ); it != _memo.end() )
        return it->second;
    Lit x;
    if ( f.op() == Op::Atom || f.op() == Op::Box )
        x = 2 * new_var();
    else
    {
        Lit a = encode( f.lhs() );
        Lit b = encode( f.rhs() );
        x = 2 * new_var();
        Lit nx = x ^ 1;
        switch ( f.op() )
        {
        case Op::And:
            add_clause( { nx, a } );
            add_clause( { nx, b } );
            add_clause( { x, a ^ 1, b ^ 1 } );
            break;
        case Op::Or:
            add_clause( { nx, a, b } );
            add_clause( { x, a ^ 1 } );
            add_clause( { x, b ^ 1 } );
            break;
        default: // Imp
            add_clause( { nx, a ^ 1, b } );
            add_clause( { x, a } );
            add_clause( { x, b ^ 1 } );
            break;
        }
    }
    _memo.emplace( f, x );
    return x;
}

void PropSolver::add( const Formula& f ) { add_clause( { encode( f ) } ); }

int PropSolver::value( Lit l ) const
{
    int a = _assign[ l >> 1 ];
    return a < 0 ? -1 : a ^ ( l & 1 );
}

bool PropSolver::enqueue( Lit l )
{
    int v = value( l );
    if ( v >= 0 )
        return v == 1;
    _assign[ l >> 1 ] = static_cast< signed char >( 1 - ( l & 1 ) );
    _trail.push_back( l );
    return true;
}

bool PropSolver::propagate( std::size_t& head )
{
    while ( head < _trail.size() )
    {
        Lit falsified = _trail[ head++ ] ^ 1;
        auto& ws = _watches[ falsified ];
        std::size_t keep = 0;
        bool conflict = false;
        for ( std::size_t i = 0; i < ws.size(); ++i )
        {
            int ci = ws[ i ];
            if ( conflict )
            {
                ws[ keep++ ] = ci;
                continue;
            }
            auto& c = _clauses[ ci ];
            if ( c[ 0 ] == falsified )
                std::swap( c[ 0 ], c[ 1 ] );
            if ( value( c[ 0 ] ) == 1 )
            {
                ws[ keep++ ] = ci;
                continue;
            }
            bool moved = false;
            for ( std::size_t k = 2; k < c.size(); ++k )
            {
                if ( value( c[ k ] ) != 0 )
                {
                    std::swap( c[ 1 ], c[ k ] );
                    _watches[ c[ 1 ] ].push_back( ci );
                    moved = true;
                    break;
                }
            }
            if ( moved )
                continue;
            ws[ keep++ ] = ci;
            if ( !enqueue( c[ 0 ] ) )
                conflict = true;
        }
        ws.resize( keep );
        if ( conflict )
            return false;
    }
    return true;
}

bool PropSolver::satisfiable( const std::vector< Formula >& assume )
{
    std::vector< Lit > extra;
    extra.reserve( assume.size() );
    for ( auto& f : assume )
        extra.push_back( encode( f ) );
    if ( _broken )
        return false;

    std::fill( _assign.begin(), _assign.end(), -1 );
    _trail.clear();
    std::size_t head = 0;
    for ( Lit u : _units )
        if ( !enqueue( u ) )
            return false;
    for ( Lit l : extra )
        if ( !enqueue( l ) )
            return false;
    if ( !propagate( head ) )
        return false;

    struct Decision
    {
        std::size_t trail_pos;
        Lit lit;
        bool flipped;
    };
    std::vector< Decision > stack;
    auto undo = [ & ]( std::size_t pos ) {
        for ( std::size_t t = pos; t < _trail.size(); ++t )
            _assign[ _trail[ t ] >> 1 ] = -1;
        _trail.resize( pos );
        head = pos;
    };

    int next = 1;
    const int n = static_cast< int >( _assign.size() );
    for ( ;; )
    {
        while ( next < n && _assign[ next ] >= 0 )
            ++next;
        if ( next == n )
            return true;
        stack.push_back( { _trail.size(), 2 * next, false } );
        enqueue( 2 * next );
        while ( !propagate( head ) )
        {
            while ( !stack.empty() && stack.back().flipped )
            {
                undo( stack.back().trail_pos );
                stack.pop_back();
            }
            if ( stack.empty() )
                return false;
            auto& d = stack.back();
            undo( d.trail_pos );
            d.flipped = true;
            d.lit ^= 1;
            enqueue( d.lit );
        }
        // Backtracking may free variables below the scan position.
        next = 1;
    }
}

bool is_tautology( const Formula& f )
{
    PropSolver s;
    return !s.satisfiable( { Formula::neg( f ) } );
}

bool entails( const std::vector< Formula >& premises, const Formula& goal )
{
    PropSolver s;
    for ( auto& p : premises )
        s.add( p );
    return !s.satisfiable( { Formula::neg( goal ) } );
}

} // namespace nwb
