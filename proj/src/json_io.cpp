#include "nwb/json_io.hpp"

#include "nwb/parser.hpp"

namespace nwb
{

namespace
{

[[noreturn]] void bad( const std::string& what ) { throw FormatError( what ); }

const json& field( const json& j, const char* key )
{
    if ( !j.is_object() || !j.contains( key ) )
        bad( std::string( "missing field \"" ) + key + "\"" );
    return j.at( key );
}

int as_int( const json& j, const char* what )
{
    if ( !j.is_number_integer() )
        bad( std::string( what ) + " must be an integer" );
    return j.get< int >();
}

World world_from_json( const json& j )
{
    // Object keys arrive as strings.
    if ( j.is_string() )
    {
        const auto& s = j.get_ref< const std::string& >();
        try
        {
            std::size_t used = 0;
            int w = std::stoi( s, &used );
            if ( used == s.size() )
                return w;
        }
        catch ( const std::exception& )
        {
        }
        bad( "world label \"" + s + "\" is not an integer" );
    }
    return as_int( j, "world label" );
}

WorldSet worldset_from_json( const json& j )
{
    if ( !j.is_array() )
        bad( "a world set must be an array" );
    WorldSet s;
    for ( auto& w : j )
        s.insert( world_from_json( w ) );
    return s;
}

Formula formula_from_json( const json& j, Namespace ns )
{
    if ( !j.is_string() )
        bad( "formulas must be strings" );
    try
    {
        return parse( j.get< std::string >(), ns );
    }
    catch ( const ParseError& e )
    {
        bad( "cannot parse \"" + j.get< std::string >() + "\": " + e.what() );
    }
}

} // namespace

json stage_to_json( const Stage& s )
{
    if ( s <= Stage{ 1ULL << 53 } )
        return json( s.convert_to< std::uint64_t >() );
    return json( to_string( s ) );
}

Stage stage_from_json( const json& j )
{
    if ( j.is_number_unsigned() || ( j.is_number_integer() && j.get< std::int64_t >() >= 0 ) )
        return Stage{ j.get< std::uint64_t >() };
    if ( j.is_string() )
    {
        try
        {
            return code_from_string( j.get< std::string >() );
        }
        catch ( const std::invalid_argument& )
        {
        }
    }
    bad( "a stage must be a natural number or a decimal string" );
}

json to_json( const WorldSet& s ) { return json( std::vector< World >( s.begin(), s.end() ) ); }

json to_json( const Frame& fr )
{
    json N = json::object();
    for ( auto& [ x, fam ] : fr.N )
    {
        // Larger sets first, so W leads each family.
        std::vector< WorldSet > sets( fam.begin(), fam.end() );
        std::stable_sort( sets.begin(), sets.end(), []( auto& a, auto& b ) { return a.size() > b.size(); } );
        json arr = json::array();
        for ( auto& V : sets )
            arr.push_back( to_json( V ) );
        N[ std::to_string( x ) ] = std::move( arr );
    }
    return { { "worlds", to_json( fr.worlds ) }, { "N", std::move( N ) } };
}

json to_json( const Model& m )
{
    json j = to_json( m.frame );
    json val = json::object();
    for ( auto& [ p, s ] : m.val )
        val[ p ] = to_json( s );
    j[ "val" ] = std::move( val );
    return j;
}

Frame frame_from_json( const json& j )
{
    Frame fr;
    fr.worlds = worldset_from_json( field( j, "worlds" ) );
    const auto& N = field( j, "N" );
    if ( !N.is_object() )
        bad( "\"N\" must be an object keyed by world" );
    for ( auto& [ key, fam ] : N.items() )
    {
        World x = world_from_json( json( key ) );
        if ( !fam.is_array() )
            bad( "N(" + key + ") must be an array of world sets" );
        auto& dst = fr.N[ x ];
        for ( auto& V : fam )
            dst.insert( worldset_from_json( V ) );
    }
    return fr;
}

Model model_from_json( const json& j )
{
    Model m{ frame_from_json( j ), {} };
    if ( j.contains( "val" ) )
    {
        const auto& val = j.at( "val" );
        if ( !val.is_object() )
            bad( "\"val\" must be an object keyed by atom" );
        for ( auto& [ p, s ] : val.items() )
        {
            if ( !valid_atom_name( p, Namespace::Modal ) )
                bad( "\"" + p + "\" is not an atom name" );
            m.val[ p ] = worldset_from_json( s );
        }
    }
    return m;
}

json to_json( const Verdict& v )
{
    if ( auto* cm = std::get_if< Countermodel >( &v ) )
        return { { "verdict", "countermodel" }, { "witness", cm->witness }, { "model", to_json( cm->model ) } };
    return { { "verdict", "no_countermodel_upto" }, { "bound", std::get< NoCountermodelUpTo >( v ).bound } };
}

Verdict verdict_from_json( const json& j )
{
    const auto& kind = field( j, "verdict" );
    if ( kind == "countermodel" )
        return Countermodel{ model_from_json( field( j, "model" ) ), as_int( field( j, "witness" ), "witness" ) };
    if ( kind == "no_countermodel_upto" )
    {
        const auto& b = field( j, "bound" );
        if ( !b.is_number_integer() )
            bad( "bound must be an integer" );
        return NoCountermodelUpTo{ b.get< std::int64_t >() };
    }
    bad( "unknown verdict" );
}

json to_json( const Catalog& cat )
{
    json arr = json::array();
    std::size_t g = 0;
    auto flush_gaps = [ & ]( int before ) {
        for ( ; g < cat.gaps.size() && cat.gaps[ g ].entries_before <= before; ++g )
            arr.push_back( { { "skipped", render( cat.gaps[ g ].formula ) }, { "reason", cat.gaps[ g ].reason } } );
    };
    for ( auto& e : cat.entries )
    {
        flush_gaps( e.k );
        arr.push_back( { { "k", e.k },
                         { "formula", render( e.formula ) },
                         { "block", { e.lo, e.hi } },
                         { "witness", e.witness },
                         { "model", to_json( e.model ) } } );
    }
    flush_gaps( static_cast< int >( cat.entries.size() ) );
    return arr;
}

Catalog catalog_from_json( const json& j, Logic l )
{
    if ( !j.is_array() )
        bad( "a catalog must be an array" );
    Catalog cat;
    cat.logic = l;
    World next = 1;
    for ( auto& item : j )
    {
        if ( item.contains( "skipped" ) )
        {
            cat.gaps.push_back( { formula_from_json( item.at( "skipped" ), Namespace::Modal ),
                                  item.value( "reason", std::string{} ), static_cast< int >( cat.entries.size() ) } );
            continue;
        }
        CatalogEntry e;
        e.k = as_int( field( item, "k" ), "k" );
        if ( e.k != static_cast< int >( cat.entries.size() ) )
            bad( "catalog entries must be numbered 0, 1, 2, ... in order" );
        e.formula = formula_from_json( field( item, "formula" ), Namespace::Modal );
        const auto& block = field( item, "block" );
        if ( !block.is_array() || block.size() != 2 )
            bad( "block must be [lo, hi]" );
        e.lo = as_int( block[ 0 ], "block" );
        e.hi = as_int( block[ 1 ], "block" );
        if ( e.lo != next || e.hi < e.lo )
            bad( "blocks must be consecutive intervals starting at 1" );
        next = e.hi + 1;
        e.model = model_from_json( field( item, "model" ) );
        WorldSet expect;
        for ( World w = e.lo; w <= e.hi; ++w )
            expect.insert( w );
        if ( e.model.frame.worlds != expect )
            bad( "model " + std::to_string( e.k ) + " does not live on its block" );
        if ( auto p = model_problem( e.model ); !p.empty() )
            bad( "model " + std::to_string( e.k ) + ": " + p );
        if ( !frame_ok( e.model.frame, l ) )
            bad( "model " + std::to_string( e.k ) + " is not a " + std::string( name( l ) ) + " frame" );
        auto fw = falsifying_worlds( e.model, e.formula );
        if ( fw.empty() )
            bad( "model " + std::to_string( e.k ) + " does not falsify its formula" );
        e.witness = item.contains( "witness" ) ? as_int( item.at( "witness" ), "witness" ) : *fw.begin();
        if ( fw.count( e.witness ) == 0 )
            bad( "witness of entry " + std::to_string( e.k ) + " does not falsify its formula" );
        cat.entries.push_back( std::move( e ) );
    }
    return cat;
}

Derivation derivation_from_json( const json& j, Logic l )
{
    const json& steps = j.is_object() ? field( j, "steps" ) : j;
    if ( !steps.is_array() )
        bad( "a derivation must be an array of steps" );
    Derivation d;
    d.logic = l;
    for ( auto& s : steps )
    {
        Step step;
        step.formula = formula_from_json( field( s, "formula" ), Namespace::Modal );
        const auto& by = field( s, "by" );
        if ( by.is_string() )
        {
            auto r = rule_from_name( by.get< std::string >() );
            if ( !r || *r == Rule::MP || *r == Rule::Nec || *r == Rule::RE )
                bad( "unknown justification " + by.dump() );
            step.rule = *r;
        }
        else if ( by.is_object() && by.size() == 1 )
        {
            auto& [ key, arg ] = *by.items().begin();
            auto r = rule_from_name( key );
            if ( r == Rule::MP )
            {
                if ( !arg.is_array() || arg.size() != 2 )
                    bad( "MP takes [i, j]" );
                step.i = as_int( arg[ 0 ], "MP premise" );
                step.j = as_int( arg[ 1 ], "MP premise" );
            }
            else if ( r == Rule::Nec || r == Rule::RE )
                step.i = as_int( arg, "premise" );
            else
                bad( "unknown justification " + by.dump() );
            step.rule = *r;
        }
        else
            bad( "unknown justification " + by.dump() );
        d.steps.push_back( std::move( step ) );
    }
    return d;
}

Scenario scenario_from_json( const json& j )
{
    if ( !j.is_object() )
        bad( "a scenario must be an object" );
    Scenario sc;
    if ( j.contains( "axioms" ) )
        for ( auto& f : j.at( "axioms" ) )
            sc.axioms.push_back( formula_from_json( f, Namespace::Toy ) );
    if ( j.contains( "schedule" ) )
    {
        if ( !j.at( "schedule" ).is_object() )
            bad( "\"schedule\" must map stages to formulas" );
        for ( auto& [ key, f ] : j.at( "schedule" ).items() )
        {
            Stage t = stage_from_json( json( key ) );
            if ( !sc.schedule.emplace( t, formula_from_json( f, Namespace::Toy ) ).second )
                bad( "stage " + key + " is scheduled twice" );
        }
    }
    if ( j.contains( "inject" ) )
        for ( auto& pair : j.at( "inject" ) )
        {
            if ( !pair.is_array() || pair.size() != 2 )
                bad( "injections are [stage, formula] pairs" );
            sc.inject.emplace_back( stage_from_json( pair[ 0 ] ), formula_from_json( pair[ 1 ], Namespace::Toy ) );
        }
    if ( j.contains( "horizon" ) && !j.at( "horizon" ).is_null() )
        sc.horizon = stage_from_json( j.at( "horizon" ) );
    return sc;
}

json to_json( const Scenario& sc )
{
    json axioms = json::array();
    for ( auto& f : sc.axioms )
        axioms.push_back( render( f, Namespace::Toy ) );
    json schedule = json::object();
    for ( auto& [ t, f ] : sc.schedule )
        schedule[ to_string( t ) ] = render( f, Namespace::Toy );
    json inject = json::array();
    for ( auto& [ t, f ] : sc.inject )
        inject.push_back( { stage_to_json( t ), render( f, Namespace::Toy ) } );
    json j{ { "axioms", axioms }, { "schedule", schedule }, { "inject", inject } };
    if ( sc.horizon )
        j[ "horizon" ] = stage_to_json( *sc.horizon );
    return j;
}

json to_json( const GTrace& t )
{
    auto list = [ & ]( const std::vector< Formula >& fs ) {
        json a = json::array();
        for ( auto& f : fs )
            a.push_back( render( f, Namespace::Toy ) );
        return a;
    };
    json j;
    j[ "variant" ] = std::string( name( t.variant ) );
    j[ "logic" ] = std::string( name( t.logic ) );
    j[ "horizon" ] = stage_to_json( t.htrace.horizon );

    json entries = json::array();
    for ( auto& e : t.entries )
    {
        const char* src = e.source == ProofEntry::Source::Axiom    ? "axiom"
                          : e.source == ProofEntry::Source::Inject ? "inject"
                                                                   : "schedule";
        entries.push_back( { { "stage", stage_to_json( e.stage ) },
                             { "declared", stage_to_json( e.declared ) },
                             { "source", src },
                             { "formula", render( e.formula, Namespace::Toy ) } } );
    }
    j[ "proofs" ] = std::move( entries );

    json J = json::array();
    for ( auto& [ s, set ] : t.htrace.J )
    {
        json item{ { "stage", stage_to_json( s ) } };
        if ( set.all )
            item[ "all" ] = true;
        else
            item[ "members" ] = set.members;
        J.push_back( std::move( item ) );
    }
    j[ "J" ] = std::move( J );

    if ( t.htrace.trigger )
        j[ "trigger" ] = { { "stage", stage_to_json( t.htrace.trigger->s ) }, { "value", t.htrace.trigger->i } };
    else
        j[ "trigger" ] = nullptr;

    j[ "output" ] = list( t.output );
    if ( t.phase2 )
    {
        const auto& p = *t.phase2;
        json p2{ { "k", p.k }, { "P", list( p.P ) }, { "X", list( p.X ) }, { "Y", list( p.Y ) } };
        json classes = json::array();
        for ( auto& c : p.classes() )
            classes.push_back( list( c ) );
        p2[ "classes" ] = std::move( classes );
        if ( t.variant == Variant::G1 )
        {
            json Z = json::array();
            for ( auto& [ f, level ] : p.z_levels() )
                Z.push_back( { { "formula", render( f, Namespace::Toy ) }, { "level", level } } );
            p2[ "Z" ] = std::move( Z );
        }
        j[ "phase2" ] = std::move( p2 );
    }
    return j;
}

json to_json( const CheckReport& r )
{
    return { { "check", std::string( name( r.check ) ) },
             { "status", std::string( name( r.status ) ) },
             { "examined", r.examined },
             { "detail", r.detail } };
}

json to_json( const FrameCheck& c )
{
    if ( std::holds_alternative< FrameOk >( c ) )
        return { { "result", "ok" } };
    if ( auto* v = std::get_if< FrameViolation >( &c ) )
    {
        json sets = json::array();
        for ( auto& s : v->sets )
            sets.push_back( to_json( s ) );
        return { { "result", "violation" },
                 { "world", v->world },
                 { "property", std::string( name( v->property ) ) },
                 { "sets", std::move( sets ) },
                 { "message", v->message } };
    }
    return { { "result", "malformed" }, { "message", std::get< FrameMalformed >( c ).message } };
}

json to_json( const DerivationCheck& c )
{
    if ( std::holds_alternative< Accepted >( c ) )
        return { { "result", "accepted" } };
    const auto& r = std::get< Rejected >( c );
    const char* kind = r.kind == Rejected::Kind::Invalid    ? "invalid"
                       : r.kind == Rejected::Kind::BadIndex ? "bad_index"
                                                            : "not_permitted";
    return { { "result", "rejected" }, { "step", r.step }, { "kind", kind }, { "reason", r.reason } };
}

} // namespace nwb
