// nwb: command-line front end.  Machine output is JSON on stdout; --pretty
// switches to a readable rendering.  Exit codes: 0 success / claim holds,
// 1 negative answer, 2 usage or resource error.

#include "nwb/coding.hpp"
#include "nwb/decide.hpp"
#include "nwb/enumerate.hpp"
#include "nwb/json_io.hpp"
#include "nwb/parser.hpp"
#include "nwb/prover.hpp"
#include "nwb/random_formula.hpp"
#include "nwb/sandbox.hpp"
#include "nwb/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nwb;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string logic = "EN";
    std::string formula;
    std::string file;
    std::int64_t bound = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string scenario;
    std::string catalog;
    std::vector< std::string > verify;
    std::string variant = "g0";
    int count = 3;
    bool pretty = false;
    bool toy = false;
    int entry = -1;
    int world = 0;
    std::vector< std::string > battery;
};

std::string slurp( const std::string& path )
{
    if ( path.empty() || path == "-" )
    {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in( path );
    if ( !in )
        throw UsageError( "cannot read " + path );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json( const std::string& path )
{
    auto text = slurp( path );
    try
    {
        return json::parse( text );
    }
    catch ( const json::parse_error& e )
    {
        throw FormatError( ( path.empty() ? std::string( "stdin" ) : path ) + ": " + e.what() );
    }
}

Logic logic_of( const Options& o )
{
    auto l = logic_from_name( o.logic );
    if ( !l )
        throw UsageError( "unknown logic " + o.logic + " (expected EN, ECN, ENP, END or ECNP)" );
    return *l;
}

// --formula wins; otherwise --file holds the formula text.
Formula formula_of( const Options& o, Namespace ns = Namespace::Modal )
{
    if ( !o.formula.empty() && !o.file.empty() )
        throw UsageError( "give either --formula or --file, not both" );
    if ( o.formula.empty() && o.file.empty() )
        throw UsageError( "a formula is required (--formula or --file)" );
    std::string text = o.formula.empty() ? slurp( o.file ) : o.formula;
    while ( !text.empty() && ( text.back() == '\n' || text.back() == '\r' ) )
        text.pop_back();
    return parse( text, ns );
}

std::string pretty_set( const WorldSet& s ) { return to_string( s ); }

std::string pretty_model( const Model& m )
{
    std::ostringstream out;
    out << "  worlds " << pretty_set( m.frame.worlds ) << "\n";
    for ( auto& [ x, fam ] : m.frame.N )
    {
        out << "  N(" << x << ") = {";
        bool first = true;
        for ( auto& V : fam )
        {
            out << ( first ? "" : ", " ) << pretty_set( V );
            first = false;
        }
        out << "}\n";
    }
    for ( auto& [ p, s ] : m.val )
        out << "  v(" << p << ") = " << pretty_set( s ) << "\n";
    return out.str();
}

void emit( const Options& o, const json& j, const std::string& human = {} )
{
    if ( o.pretty )
        std::cout << ( human.empty() ? j.dump( 2 ) + "\n" : human );
    else
        std::cout << j.dump() << "\n";
}

// Models carried by a document: a bare model, a verdict, or a catalog.
struct Carried
{
    Model model;
    std::optional< Formula > formula;
    World witness = 0;
};

std::vector< Carried > carried_models( const json& doc )
{
    std::vector< Carried > out;
    auto one = [ & ]( const json& j ) {
        Carried c;
        if ( j.contains( "verdict" ) )
        {
            if ( j.at( "verdict" ) != "countermodel" )
                throw FormatError( "the verdict carries no model" );
            c.model = model_from_json( j.at( "model" ) );
            c.witness = j.at( "witness" ).get< int >();
        }
        else if ( j.contains( "model" ) )
        {
            c.model = model_from_json( j.at( "model" ) );
            c.witness = j.value( "witness", 0 );
        }
        else
            c.model = model_from_json( j );
        if ( j.contains( "formula" ) )
            c.formula = parse( j.at( "formula" ).get< std::string >() );
        out.push_back( std::move( c ) );
    };
    if ( doc.is_array() )
    {
        for ( auto& e : doc )
            if ( !e.contains( "skipped" ) )
                one( e );
    }
    else
        one( doc );
    return out;
}

int cmd_parse( const Options& o )
{
    Namespace ns = o.toy ? Namespace::Toy : Namespace::Modal;
    auto f = formula_of( o, ns );
    std::vector< std::string > atoms;
    for ( auto& a : atoms_of( f ) )
        atoms.push_back( a );
    json j{ { "formula", render( f, ns ) },
            { "code", to_string( godel_code( f, ns ) ) },
            { "symbols", symbol_length( f, ns ) },
            { "size", f.size() },
            { "modal_depth", f.modal_depth() },
            { "atoms", atoms } };
    emit( o, j, render( f, ns ) + "\n  code " + to_string( godel_code( f, ns ) ) + "\n" );
    return exit_ok;
}

json verdict_doc( Logic l, const Formula& f, const Verdict& v )
{
    json j = to_json( v );
    j[ "logic" ] = std::string( name( l ) );
    j[ "formula" ] = render( f );
    return j;
}

std::string pretty_verdict( Logic l, const Formula& f, const Verdict& v )
{
    std::ostringstream out;
    out << render( f ) << " in " << name( l ) << ": ";
    if ( auto* cm = std::get_if< Countermodel >( &v ) )
        out << "false at world " << cm->witness << " of\n" << pretty_model( cm->model );
    else
        out << "no countermodel with at most " << std::get< NoCountermodelUpTo >( v ).bound << " worlds\n";
    return out.str();
}

int cmd_decide( const Options& o, bool oracle )
{
    Logic l = logic_of( o );
    auto f = formula_of( o );
    std::int64_t bound = o.bound;
    if ( bound == 0 )
        bound = oracle ? 3 : default_bound( f );
    if ( bound < 1 )
        throw UsageError( "--bound must be positive" );
    Verdict v;
    if ( oracle )
    {
        if ( bound > 3 )
            throw UsageError( "the oracle handles at most 3 worlds" );
        v = oracle_validity( l, f, static_cast< int >( bound ) );
    }
    else
        v = search_countermodel( l, f, bound );
    emit( o, verdict_doc( l, f, v ), pretty_verdict( l, f, v ) );
    return std::holds_alternative< Countermodel >( v ) ? exit_negative : exit_ok;
}

int cmd_check_frame( const Options& o )
{
    Logic l = logic_of( o );
    auto models = carried_models( read_json( o.file ) );
    json results = json::array();
    bool ok = true;
    std::string human;
    for ( auto& c : models )
    {
        auto r = check_frame( c.model.frame, l );
        ok = ok && std::holds_alternative< FrameOk >( r );
        json rj = to_json( r );
        results.push_back( rj );
        human += rj.at( "result" ).get< std::string >();
        if ( rj.contains( "message" ) )
            human += ": " + rj.at( "message" ).get< std::string >();
        human += "\n";
    }
    json j = models.size() == 1 ? results[ 0 ] : json{ { "results", results } };
    j[ "logic" ] = std::string( name( l ) );
    emit( o, j, human );
    return ok ? exit_ok : exit_negative;
}

// With a witness the claim is "the witness falsifies the formula"; without
// one it is "the formula is true everywhere" (or at --world).
int cmd_check_model( const Options& o )
{
    std::optional< Formula > given;
    if ( !o.formula.empty() )
        given = parse( o.formula );
    auto models = carried_models( read_json( o.file ) );
    json results = json::array();
    bool ok = true;
    std::string human;
    for ( auto& c : models )
    {
        auto f = given ? given : c.formula;
        if ( !f )
            throw UsageError( "no formula given and the document names none" );
        json r{ { "formula", render( *f ) } };
        if ( auto p = model_problem( c.model ); !p.empty() )
        {
            ok = false;
            r[ "result" ] = "malformed";
            r[ "message" ] = p;
            human += "malformed: " + p + "\n";
            results.push_back( r );
            continue;
        }
        auto ts = truth_set( c.model, *f );
        r[ "truth_set" ] = to_json( ts );
        bool holds;
        if ( c.witness != 0 && o.world == 0 )
        {
            if ( !c.model.frame.worlds.count( c.witness ) )
                throw FormatError( "witness " + std::to_string( c.witness ) + " is not a world of the model" );
            holds = !ts.count( c.witness );
            r[ "witness" ] = c.witness;
            r[ "claim" ] = "falsified_at_witness";
        }
        else if ( o.world != 0 )
        {
            if ( !c.model.frame.worlds.count( o.world ) )
                throw UsageError( "world " + std::to_string( o.world ) + " is not in the model" );
            holds = ts.count( o.world ) > 0;
            r[ "world" ] = o.world;
            r[ "claim" ] = "true_at_world";
        }
        else
        {
            holds = ts == c.model.frame.worlds;
            r[ "claim" ] = "valid_in_model";
        }
        r[ "result" ] = holds ? "holds" : "fails";
        ok = ok && holds;
        human += render( *f ) + ": " + r[ "claim" ].get< std::string >() + " " + ( holds ? "holds" : "fails" ) +
                 ", truth set " + to_string( ts ) + "\n";
        results.push_back( r );
    }
    emit( o, models.size() == 1 ? results[ 0 ] : json{ { "results", results } }, human );
    return ok ? exit_ok : exit_negative;
}

int cmd_check_derivation( const Options& o )
{
    Logic l = logic_of( o );
    auto d = derivation_from_json( read_json( o.file ), l );
    auto r = check_derivation( d );
    json j = to_json( r );
    j[ "logic" ] = std::string( name( l ) );
    if ( !d.steps.empty() )
        j[ "conclusion" ] = render( d.steps.back().formula );
    std::string human;
    if ( std::holds_alternative< Accepted >( r ) )
        human = "accepted" + ( d.steps.empty() ? std::string{} : ": " + render( d.steps.back().formula ) ) + "\n";
    else
    {
        const auto& rej = std::get< Rejected >( r );
        human = "rejected at step " + std::to_string( rej.step ) + ": " + rej.reason + "\n";
    }
    emit( o, j, human );
    return std::holds_alternative< Accepted >( r ) ? exit_ok : exit_negative;
}

int cmd_catalog( const Options& o )
{
    Logic l = logic_of( o );
    if ( o.count < 0 )
        throw UsageError( "--count must be non-negative" );
    auto cat = build_catalog( l, o.count );
    std::string human;
    for ( auto& e : cat.entries )
        human += "A" + std::to_string( e.k ) + " = " + render( e.formula ) + ", worlds " + std::to_string( e.lo ) +
                 ".." + std::to_string( e.hi ) + ", witness " + std::to_string( e.witness ) + "\n" +
                 pretty_model( e.model );
    for ( auto& g : cat.gaps )
        human += "skipped " + render( g.formula ) + ": " + g.reason + "\n";
    emit( o, to_json( cat ), human );
    return exit_ok;
}

int cmd_simulate( const Options& o )
{
    Logic l = logic_of( o );
    Variant v;
    if ( o.variant == "g0" )
        v = Variant::G0;
    else if ( o.variant == "g1" )
        v = Variant::G1;
    else
        throw UsageError( "unknown variant " + o.variant + " (expected g0 or g1)" );

    std::vector< Check > checks;
    bool truth_lemma = false;
    for ( auto& s : o.verify )
    {
        auto c = check_from_name( s );
        if ( !c )
            throw UsageError( "unknown check " + s );
        if ( *c == Check::TruthLemma )
            truth_lemma = true;
        else
            checks.push_back( *c );
    }
    if ( truth_lemma && ( o.entry < 0 || o.world <= 0 || o.battery.empty() ) )
        throw UsageError( "TruthLemma needs --entry, --world and at least one --battery formula" );

    std::shared_ptr< Catalog > cat;
    if ( o.catalog.empty() )
        cat = std::make_shared< Catalog >( build_catalog( l, o.count ) );
    else
    {
        cat = std::make_shared< Catalog >( catalog_from_json( read_json( o.catalog ), l ) );
        for ( auto& e : cat->entries )
            if ( auto r = check_frame( e.model.frame, l ); !std::holds_alternative< FrameOk >( r ) )
                throw FormatError( "catalog model " + std::to_string( e.k ) + " is not a " + std::string( name( l ) ) +
                                   " frame" );
    }

    Scenario sc;
    if ( !o.scenario.empty() )
        sc = scenario_from_json( read_json( o.scenario ) );
    std::vector< Formula > battery;
    for ( auto& b : o.battery )
        battery.push_back( parse( b ) );
    if ( truth_lemma )
        sc = seed_truth_lemma( sc, *cat, o.entry, o.world, battery );

    auto trace = run_g( v, sc, cat );
    json reports = json::array();
    bool ok = true;
    std::string human;
    auto add = [ & ]( const CheckReport& r ) {
        ok = ok && r.status != Status::Fail;
        reports.push_back( to_json( r ) );
        human += std::string( name( r.check ) ) + ": " + std::string( name( r.status ) ) + " (" + r.detail + ")\n";
    };
    for ( auto c : checks )
        add( verify_run( trace, c ) );
    if ( truth_lemma )
        add( verify_truth_lemma( trace, o.entry, o.world, battery ) );

    json j{ { "trace", to_json( trace ) }, { "checks", reports } };
    std::string head = trace.triggered() ? "triggered at stage " + to_string( trace.htrace.trigger->s ) + " with i = " +
                                               std::to_string( trace.htrace.trigger->i )
                                         : std::string( "not triggered" );
    emit( o, j, head + ", " + std::to_string( trace.output.size() ) + " formulas output\n" + human );
    return ok ? exit_ok : exit_negative;
}

// Re-verifies a verdict document against --logic and --formula.
int verify_verdict( const Options& o )
{
    json doc = read_json( o.file );
    Options lo;
    lo.logic = o.logic;
    if ( lo.logic.empty() && doc.contains( "logic" ) )
        lo.logic = doc.at( "logic" ).get< std::string >();
    if ( lo.logic.empty() )
        throw UsageError( "--logic is required when the verdict names no logic" );
    Logic l = logic_of( lo );
    Formula f;
    if ( !o.formula.empty() )
        f = parse( o.formula );
    else if ( doc.contains( "formula" ) )
        f = parse( doc.at( "formula" ).get< std::string >() );
    else
        throw UsageError( "no formula given and the verdict names none" );

    auto v = verdict_from_json( doc );
    json j{ { "logic", std::string( name( l ) ) }, { "formula", render( f ) } };
    bool ok;
    if ( auto* cm = std::get_if< Countermodel >( &v ) )
    {
        auto problem = verify_countermodel( l, f, *cm );
        ok = problem.empty();
        j[ "verdict" ] = "countermodel";
        if ( !ok )
            j[ "problem" ] = problem;
    }
    else
    {
        auto bound = std::get< NoCountermodelUpTo >( v ).bound;
        j[ "verdict" ] = "no_countermodel_upto";
        j[ "bound" ] = bound;
        auto again = search_countermodel( l, f, bound );
        ok = std::holds_alternative< NoCountermodelUpTo >( again );
        if ( ok && bound <= 3 && atoms_of( f ).size() <= 3 )
        {
            ok = std::holds_alternative< NoCountermodelUpTo >( oracle_validity( l, f, static_cast< int >( bound ) ) );
            j[ "oracle" ] = ok ? "agrees" : "disagrees";
        }
        if ( !ok )
            j[ "problem" ] = "a countermodel within the bound exists";
    }
    j[ "result" ] = ok ? "confirmed" : "refuted";
    emit( o, j, std::string( ok ? "confirmed" : "refuted" ) + ( j.contains( "problem" ) ? ": " + j[ "problem" ].get< std::string >() : "" ) + "\n" );
    return ok ? exit_ok : exit_negative;
}

// Random cross-validation of search_countermodel against the oracle.
int verify_random( const Options& o )
{
    std::vector< Logic > logics;
    if ( o.logic.empty() )
        logics.assign( all_logics.begin(), all_logics.end() );
    else
        logics.push_back( logic_of( o ) );
    RandomFormulaOptions ro;
    ro.atoms = { "p", "q" };
    ro.max_depth = 6;
    ro.max_modal_depth = 2;
    ro.max_connectives = 12;
    RandomFormula gen( o.seed, ro );
    int n = o.count;
    json failures = json::array();
    int countermodels = 0;
    for ( int t = 0; t < n; ++t )
    {
        auto f = gen.next();
        for ( auto l : logics )
        {
            auto ov = oracle_validity( l, f, 3 );
            auto sv = search_countermodel( l, f, 3 );
            auto note = [ & ]( const std::string& what ) {
                failures.push_back( { { "formula", render( f ) }, { "logic", std::string( name( l ) ) }, { "problem", what } } );
            };
            if ( std::holds_alternative< Countermodel >( ov ) != std::holds_alternative< Countermodel >( sv ) )
                note( "oracle and search disagree" );
            for ( auto* v : { &ov, &sv } )
                if ( auto* cm = std::get_if< Countermodel >( v ) )
                {
                    ++countermodels;
                    if ( auto p = verify_countermodel( l, f, *cm ); !p.empty() )
                        note( p );
                }
        }
    }
    json j{ { "seed", o.seed }, { "formulas", n }, { "countermodels_checked", countermodels }, { "failures", failures } };
    emit( o, j,
          std::to_string( n ) + " formulas, " + std::to_string( countermodels ) + " countermodels checked, " +
              std::to_string( failures.size() ) + " failures\n" );
    return failures.empty() ? exit_ok : exit_negative;
}

void add_common( CLI::App* c, Options& o, bool logic = true )
{
    if ( logic )
        c->add_option( "--logic", o.logic, "EN, ECN, ENP, END or ECNP" );
    c->add_flag( "--pretty", o.pretty, "human-readable output" );
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Workbench for the non-normal modal logics EN, ECN, ENP, END and ECNP" };
    app.require_subcommand( 1, 1 );
    Options o;

    auto* parse_cmd = app.add_subcommand( "parse", "parse a formula and print its code" );
    parse_cmd->add_option( "--formula", o.formula );
    parse_cmd->add_option( "--file", o.file, "file holding the formula" );
    parse_cmd->add_flag( "--toy", o.toy, "toy-theory grammar (lam(i), falsum, pr(.))" );
    add_common( parse_cmd, o, false );

    auto* decide = app.add_subcommand( "decide", "search for a countermodel" );
    auto* oracle = app.add_subcommand( "oracle", "brute-force validity over frames with at most 3 worlds" );
    for ( auto* c : { decide, oracle } )
    {
        c->add_option( "--formula", o.formula );
        c->add_option( "--file", o.file, "file holding the formula" );
        c->add_option( "--bound", o.bound, "maximum number of worlds" );
        add_common( c, o );
    }

    auto* check_frame_cmd = app.add_subcommand( "check-frame", "check a frame, model, verdict or catalog against a logic" );
    check_frame_cmd->add_option( "--file", o.file, "JSON document (default: stdin)" );
    add_common( check_frame_cmd, o );

    auto* check_model_cmd = app.add_subcommand( "check-model", "evaluate a formula in a model" );
    check_model_cmd->add_option( "--formula", o.formula, "defaults to the formula named by the document" );
    check_model_cmd->add_option( "--file", o.file, "JSON document (default: stdin)" );
    check_model_cmd->add_option( "--world", o.world, "check truth at this world" );
    add_common( check_model_cmd, o, false );

    auto* check_derivation_cmd = app.add_subcommand( "check-derivation", "check a Hilbert-style derivation" );
    check_derivation_cmd->add_option( "--file", o.file, "JSON derivation (default: stdin)" );
    add_common( check_derivation_cmd, o );

    auto* catalog = app.add_subcommand( "catalog", "refuted formulas in code order with countermodels" );
    catalog->add_option( "--count", o.count, "number of entries" );
    add_common( catalog, o );

    auto* simulate = app.add_subcommand( "simulate", "run the staged predicate over a scenario" );
    simulate->add_option( "--variant", o.variant, "g0 or g1" );
    simulate->add_option( "--scenario", o.scenario, "scenario JSON" );
    simulate->add_option( "--catalog", o.catalog, "catalog JSON (default: built with --count entries)" );
    simulate->add_option( "--count", o.count, "catalog size when --catalog is absent" );
    simulate->add_option( "--verify", o.verify, "comma-separated checks: E,C,ConL,ConS,ECN4,TruthLemma" )->delimiter( ',' );
    simulate->add_option( "--entry", o.entry, "TruthLemma: catalog entry k" );
    simulate->add_option( "--world", o.world, "TruthLemma: world i" );
    simulate->add_option( "--battery", o.battery, "TruthLemma: modal formula (repeatable)" );
    add_common( simulate, o );

    auto* verify = app.add_subcommand( "verify", "re-verify a verdict, or cross-validate with --seed" );
    verify->add_option( "--file", o.file, "verdict JSON (default: stdin)" );
    verify->add_option( "--formula", o.formula );
    auto* seed_opt = verify->add_option( "--seed", o.seed, "run the random cross-validation suite" );
    verify->add_option( "--count", o.count, "formulas in the random suite" );
    verify->add_option( "--logic", o.logic, "EN, ECN, ENP, END or ECNP (default: from the verdict, or all)" );
    verify->add_flag( "--pretty", o.pretty, "human-readable output" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        int code = app.exit( e );
        return code == 0 ? exit_ok : exit_error;
    }

    try
    {
        if ( *parse_cmd )
            return cmd_parse( o );
        if ( *decide )
            return cmd_decide( o, false );
        if ( *oracle )
            return cmd_decide( o, true );
        if ( *check_frame_cmd )
            return cmd_check_frame( o );
        if ( *check_model_cmd )
            return cmd_check_model( o );
        if ( *check_derivation_cmd )
            return cmd_check_derivation( o );
        if ( *catalog )
            return cmd_catalog( o );
        if ( *simulate )
            return cmd_simulate( o );
        if ( *verify )
        {
            if ( seed_opt->count() > 0 )
            {
                if ( verify->get_option( "--count" )->count() == 0 )
                    o.count = 50;
                if ( verify->get_option( "--logic" )->count() == 0 )
                    o.logic.clear();
                return verify_random( o );
            }
            if ( verify->get_option( "--logic" )->count() == 0 )
                o.logic.clear();
            return verify_verdict( o );
        }
    }
    catch ( const ParseError& e )
    {
        std::cerr << "nwb: parse error: " << e.what() << "\n";
    }
    catch ( const ResourceLimit& e )
    {
        std::cerr << "nwb: resource limit: " << e.what() << "\n";
    }
    catch ( const std::exception& e )
    {
        std::cerr << "nwb: " << e.what() << "\n";
    }
    return exit_error;
}
