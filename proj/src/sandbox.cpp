#include "nwb/sandbox.hpp"

#include "nwb/parser.hpp"
#include "nwb/propositional.hpp"
#include "nwb/toy.hpp"

#include <algorithm>

namespace nwb
{

namespace
{

void require_toy( const Formula& f, const char* what )
{
    for ( auto& g : subformulas( f ) )
    {
        if ( g.is( Op::Atom ) && !valid_atom_name( g.name(), Namespace::Toy ) )
            throw ScenarioError( std::string( what ) + " has an atom outside the toy language: " + g.name() );
    }
}

} // namespace

std::vector< ProofEntry > proof_entries( const Scenario& sc )
{
    std::vector< ProofEntry > out;
    auto add = [ & ]( ProofEntry::Source src, const Stage& declared, const Formula& f ) {
        if ( declared < 0 )
            throw ScenarioError( "negative stage" );
        Stage code = godel_code( f, Namespace::Toy );
        out.push_back( { src, declared, std::max( declared, code ), f } );
    };

    std::vector< Formula > axioms = sc.axioms;
    if ( std::find( axioms.begin(), axioms.end(), Formula::neg( falsum() ) ) == axioms.end() )
        axioms.insert( axioms.begin(), Formula::neg( falsum() ) );
    for ( auto& a : axioms )
    {
        require_toy( a, "axiom" );
        add( ProofEntry::Source::Axiom, 0, a );
    }

    std::map< Stage, Formula > claimed( sc.schedule );
    for ( auto& [ t, f ] : sc.inject )
    {
        require_toy( f, "injected formula" );
        auto [ it, fresh ] = claimed.emplace( t, f );
        if ( !fresh && it->second != f )
            throw ScenarioError( "two different proofs at stage " + to_string( t ) );
        add( ProofEntry::Source::Inject, t, f );
    }

    for ( auto& [ t, f ] : sc.schedule )
    {
        require_toy( f, "scheduled formula" );
        std::vector< Formula > visible = axioms;
        for ( auto& [ u, g ] : sc.inject )
            if ( u <= t )
                visible.push_back( g );
        if ( !taut_consequence( visible, f ) )
            throw ScenarioError( "scheduled formula at stage " + to_string( t ) +
                                 " does not follow from the axioms visible there: " + render( f, Namespace::Toy ) );
        add( ProofEntry::Source::Schedule, t, f );
    }

    std::stable_sort( out.begin(), out.end(), []( const ProofEntry& a, const ProofEntry& b ) {
        if ( a.stage != b.stage )
            return a.stage < b.stage;
        if ( a.source != b.source )
            return a.source < b.source;
        return a.declared < b.declared;
    } );
    return out;
}

int HTrace::h( const Stage& t ) const
{
    if ( trigger && t > trigger->s )
        return trigger->i;
    return 0;
}

HTrace run_h( const Scenario& sc )
{
    auto entries = proof_entries( sc );
    HTrace ht;
    ht.horizon = sc.horizon ? *sc.horizon : entries.empty() ? Stage{ 0 } : entries.back().stage;

    PropSolver solver;
    std::set< int > lams;
    for ( std::size_t n = 0; n < entries.size(); )
    {
        const Stage s = entries[ n ].stage;
        if ( s > ht.horizon )
            break;
        for ( ; n < entries.size() && entries[ n ].stage == s; ++n )
        {
            solver.add( entries[ n ].formula );
            for ( int j : lam_indices( entries[ n ].formula ) )
                lams.insert( j );
        }
        JSet J;
        if ( !solver.satisfiable() )
            J.all = true;
        else
            for ( int j : lams )
                if ( !solver.satisfiable( { lam( j ) } ) )
                    J.members.push_back( j );
        const bool fire = !J.empty();
        ht.J.emplace( s, J );
        if ( fire )
        {
            ht.trigger = Trigger{ s, J.min() };
            if ( Stage{ ht.trigger->i } > s + 1 )
                throw std::logic_error( "trigger value exceeds its stage" );
            break;
        }
    }
    return ht;
}

std::vector< Formula > proved_up_to( const std::vector< ProofEntry >& entries, const Stage& s )
{
    std::vector< Formula > out;
    std::unordered_set< Formula, FormulaHash > seen;
    for ( auto& e : entries )
        if ( e.stage <= s && seen.insert( e.formula ).second )
            out.push_back( e.formula );
    return out;
}

namespace
{

class UnionFind
{
    std::vector< int > _parent;

public:
    int add()
    {
        _parent.push_back( static_cast< int >( _parent.size() ) );
        return _parent.back();
    }

    int find( int x )
    {
        while ( _parent[ x ] != x )
            x = _parent[ x ] = _parent[ _parent[ x ] ];
        return x;
    }

    void unite( int a, int b ) { _parent[ find( a ) ] = find( b ); }
};

} // namespace

bool equiv_m( const std::vector< Formula >& P, const Formula& phi, const Formula& psi )
{
    if ( phi == psi )
        return true;
    std::unordered_map< Formula, int, FormulaHash > id;
    UnionFind uf;
    auto node = [ & ]( const Formula& f ) {
        auto it = id.find( f );
        return it != id.end() ? it->second : id.emplace( f, uf.add() ).first->second;
    };
    for ( auto& f : P )
    {
        Formula a, b;
        if ( f.as_iff( a, b ) )
            uf.unite( node( a ), node( b ) );
    }
    auto a = id.find( phi );
    auto b = id.find( psi );
    return a != id.end() && b != id.end() && uf.find( a->second ) == uf.find( b->second );
}

std::string_view name( Variant v ) { return v == Variant::G0 ? "g0" : "g1"; }

Procedure2::Procedure2( Variant v, const Catalog& cat, Trigger trig, std::vector< Formula > P_ )
        : variant{ v }, trigger{ std::move( trig ) }, k{ 0 }, bound{ trigger.s - 1 }, P{ std::move( P_ ) }
{
    auto owner = world_owner( cat, trigger.i );
    if ( !owner )
        throw ScenarioError( "trigger world " + std::to_string( trigger.i ) + " is outside the catalog" );
    k = owner->k;
    const auto& entry = cat.entries[ k ];
    const WorldSet& W = entry.model.frame.worlds;
    const Family& Ni = entry.model.frame.N.at( trigger.i );

    // Classes of <->_(s-1).
    UnionFind uf;
    auto node = [ & ]( const Formula& f ) {
        auto it = _class_of.find( f );
        return it != _class_of.end() ? it->second : _class_of.emplace( f, uf.add() ).first->second;
    };
    for ( auto& f : P )
    {
        Formula a, b;
        if ( f.as_iff( a, b ) )
        {
            _edges.emplace_back( a, b );
            uf.unite( node( a ), node( b ) );
        }
    }
    std::unordered_map< int, int > root_index;
    for ( auto& [ f, id ] : _class_of )
    {
        int r = uf.find( id );
        auto [ it, fresh ] = root_index.emplace( r, static_cast< int >( _members.size() ) );
        if ( fresh )
            _members.emplace_back();
        _members[ it->second ].push_back( f );
    }
    for ( auto& [ f, id ] : _class_of )
        id = root_index.at( uf.find( id ) );

    for ( auto& f : P )
        for ( auto& g : subformulas( f ) )
            _universe.insert( g );

    for ( auto& f : P )
        for ( auto& g : class_members( f ) )
            _x.insert( g );

    // Y: phi with (lam(j) -> phi) in P for j in V and (lam(j) -> ~phi) in P
    // for j in W \ V, for some V in N(i).
    std::unordered_map< Formula, WorldSet, FormulaHash > pos, neg;
    std::vector< Formula > candidates;
    auto note = [ & ]( auto& map, const Formula& f, int j ) {
        auto [ it, fresh ] = map.try_emplace( f );
        it->second.insert( j );
        if ( fresh )
            candidates.push_back( f );
    };
    for ( auto& f : P )
    {
        if ( !f.is( Op::Imp ) )
            continue;
        auto j = lam_index( f.lhs() );
        if ( !j || !W.count( *j ) )
            continue;
        note( pos, f.rhs(), *j );
        if ( f.rhs().is( Op::Not ) )
            note( neg, f.rhs().child(), *j );
    }
    for ( auto& phi : candidates )
    {
        const WorldSet empty;
        auto pi = pos.find( phi );
        auto ni = neg.find( phi );
        const WorldSet& ps = pi == pos.end() ? empty : pi->second;
        const WorldSet& ns = ni == neg.end() ? empty : ni->second;
        bool hit = false;
        for ( auto& V : Ni )
        {
            bool ok = std::includes( ps.begin(), ps.end(), V.begin(), V.end() );
            for ( auto it = W.begin(); ok && it != W.end(); ++it )
                if ( !V.count( *it ) && !ns.count( *it ) )
                    ok = false;
            if ( ok )
            {
                hit = true;
                break;
            }
        }
        if ( hit )
            for ( auto& g : class_members( phi ) )
                _y.insert( g );
    }

    CodeLess less{ Namespace::Toy };
    X.assign( _x.begin(), _x.end() );
    std::sort( X.begin(), X.end(), less );
    Y.assign( _y.begin(), _y.end() );
    std::sort( Y.begin(), Y.end(), less );

    if ( variant == Variant::G1 )
    {
        auto put = [ & ]( const Formula& f, int level ) {
            if ( _z_index.emplace( f, static_cast< int >( _z.size() ) ).second )
                _z.emplace_back( f, level );
        };
        for ( auto& f : P )
            put( f, 0 );
        for ( auto& f : X )
            put( f, 0 );
        for ( auto& f : Y )
            put( f, 0 );
        // Universe members in code order keep the level computation deterministic.
        std::vector< Formula > rest( _universe.begin(), _universe.end() );
        std::sort( rest.begin(), rest.end(), less );
        for ( int n = 0;; ++n )
        {
            std::vector< Formula > fresh;
            for ( auto& rho : rest )
            {
                if ( _z_index.count( rho ) )
                    continue;
                for ( auto& chi : class_members( rho ) )
                    if ( chi.is( Op::And ) && _z_index.count( chi.lhs() ) && _z_index.count( chi.rhs() ) )
                    {
                        fresh.push_back( rho );
                        break;
                    }
            }
            if ( fresh.empty() )
                break;
            for ( auto& f : fresh )
                put( f, n + 1 );
        }
        std::stable_sort( _z.begin(), _z.end(), [ & ]( auto& a, auto& b ) { return less( a.first, b.first ); } );
        _z_index.clear();
        for ( std::size_t n = 0; n < _z.size(); ++n )
            _z_index.emplace( _z[ n ].first, static_cast< int >( n ) );
    }
}

std::vector< Formula > Procedure2::class_members( const Formula& f ) const
{
    auto it = _class_of.find( f );
    if ( it == _class_of.end() )
        return { f };
    return _members[ it->second ];
}

std::vector< std::vector< Formula > > Procedure2::classes() const
{
    CodeLess less{ Namespace::Toy };
    auto out = _members;
    for ( auto& c : out )
        std::sort( c.begin(), c.end(), less );
    std::sort( out.begin(), out.end(), [ & ]( auto& a, auto& b ) { return less( a.front(), b.front() ); } );
    return out;
}

std::optional< int > Procedure2::z_level( const Formula& f ) const
{
    if ( variant != Variant::G1 )
        return std::nullopt;
    if ( auto it = _z_index.find( f ); it != _z_index.end() )
        return _z[ it->second ].second;
    if ( _universe.count( f ) || !f.is( Op::And ) )
        return std::nullopt;
    if ( auto it = _lazy.find( f ); it != _lazy.end() )
        return it->second;
    std::optional< int > level;
    try
    {
        if ( godel_code( f, Namespace::Toy ) <= bound )
        {
            auto a = z_level( f.lhs() );
            auto b = a ? z_level( f.rhs() ) : std::nullopt;
            if ( a && b )
                level = std::max( *a, *b ) + 1;
        }
    }
    catch ( const std::invalid_argument& )
    {
        // not a toy formula
    }
    _lazy.emplace( f, level );
    return level;
}

bool Procedure2::in_z( const Formula& f ) const { return z_level( f ).has_value(); }

bool Procedure2::in_output( const Formula& f ) const
{
    if ( variant == Variant::G0 )
        return in_x( f ) || in_y( f );
    return in_z( f );
}

bool GTrace::in_output( const Formula& f ) const
{
    if ( phase2 )
        return phase2->in_output( f );
    return _listed.count( f ) > 0;
}

GTrace run_g( Variant v, const Scenario& sc, std::shared_ptr< const Catalog > cat )
{
    if ( !cat )
        throw std::invalid_argument( "run_g needs a catalog" );
    GTrace t;
    t.variant = v;
    t.logic = cat->logic;
    t.catalog = cat;
    t.entries = proof_entries( sc );
    t.htrace = run_h( sc );

    if ( !t.htrace.trigger )
    {
        for ( auto& e : t.entries )
            if ( e.stage <= t.htrace.horizon )
                t.output.push_back( e.formula );
    }
    else
    {
        const auto& trig = *t.htrace.trigger;
        auto P = proved_up_to( t.entries, trig.s - 1 );
        t.output = P; // Procedure 1, stages 0 .. s-1
        auto p2 = std::make_shared< Procedure2 >( v, *cat, trig, P );
        std::unordered_set< Formula, FormulaHash > seen( P.begin(), P.end() );
        auto emit = [ & ]( const Formula& f ) {
            if ( seen.insert( f ).second )
                t.output.push_back( f );
        };
        if ( v == Variant::G0 )
        {
            for ( auto& f : p2->X )
                emit( f );
            for ( auto& f : p2->Y )
                emit( f );
        }
        else
            for ( auto& [ f, level ] : p2->z_levels() )
                emit( f );
        t.phase2 = std::move( p2 );
    }
    t._listed.insert( t.output.begin(), t.output.end() );
    return t;
}

Scenario seed_truth_lemma( const Scenario& sc, const Catalog& cat, int k, int i, const std::vector< Formula >& battery )
{
    if ( k < 0 || static_cast< std::size_t >( k ) >= cat.entries.size() )
        throw ScenarioError( "no catalog entry " + std::to_string( k ) );
    const auto& entry = cat.entries[ k ];
    if ( i < entry.lo || i > entry.hi )
        throw ScenarioError( "world " + std::to_string( i ) + " is not in block " + std::to_string( k ) );

    std::vector< Formula > seeds;
    std::unordered_set< Formula, FormulaHash > seen;
    auto seed = [ & ]( Formula f ) {
        if ( seen.insert( f ).second )
            seeds.push_back( std::move( f ) );
    };
    for ( auto& B : battery )
        for ( auto& C : subformulas( B ) )
        {
            auto fc = interpret( cat, C );
            auto truth = truth_set( entry.model, C );
            for ( World j : entry.model.frame.worlds )
                seed( Formula::imp( lam( j ), truth.count( j ) ? fc : Formula::neg( fc ) ) );
            if ( C.is( Op::Box ) )
            {
                auto arg = interpret( cat, C.child() );
                seed( Formula::iff( arg, arg ) );
            }
        }

    Stage top = 0;
    Scenario out;
    out.axioms = sc.axioms;
    for ( auto& f : seeds )
    {
        Stage c = godel_code( f, Namespace::Toy );
        top = std::max( top, c );
        out.inject.emplace_back( c, f );
    }

    const Stage shift = top + 1;
    Stage last = top;
    auto track = [ & ]( const Stage& declared, const Formula& f ) {
        last = std::max( { last, declared, godel_code( f, Namespace::Toy ) } );
    };
    for ( auto& [ t, f ] : sc.schedule )
    {
        out.schedule.emplace( t + shift, f );
        track( t + shift, f );
    }
    for ( auto& [ t, f ] : sc.inject )
    {
        out.inject.emplace_back( t + shift, f );
        track( t + shift, f );
    }
    const Stage fire = last + 1;
    out.inject.emplace_back( fire, Formula::neg( lam( i ) ) );
    if ( sc.horizon )
    {
        Stage h = *sc.horizon + shift;
        if ( h < std::max( fire, godel_code( Formula::neg( lam( i ) ), Namespace::Toy ) ) )
            throw ScenarioError( "horizon " + to_string( *sc.horizon ) + " is too small to fit the seeds" );
        out.horizon = h;
    }
    return out;
}

} // namespace nwb
