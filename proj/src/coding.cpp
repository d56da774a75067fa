#include "nwb/coding.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace nwb
{

namespace
{

// Shared connective symbols.
constexpr std::uint8_t sym_bot = 1;
constexpr std::uint8_t sym_not = 2;
constexpr std::uint8_t sym_and = 3;
constexpr std::uint8_t sym_or = 4;
constexpr std::uint8_t sym_imp = 5;
constexpr std::uint8_t sym_box = 6; // the provability marker in the toy alphabet

// Modal alphabet: 7 terminator, 8..33 a-z, 34..59 A-Z, 60..69 0-9, 70 '_'.
constexpr std::uint8_t modal_end = 7;
constexpr unsigned modal_k = 70;

// Toy alphabet: 7 falsum, 8 lam prefix, 9 terminator, 10..19 0-9,
// 20..45 a-z, 46..71 A-Z, 72 '_'.
constexpr std::uint8_t toy_falsum = 7;
constexpr std::uint8_t toy_lam = 8;
constexpr std::uint8_t toy_end = 9;
constexpr unsigned toy_k = 72;

bool is_ident( const std::string& s )
{
    if ( s.empty() || s[ 0 ] < 'a' || s[ 0 ] > 'z' )
        return false;
    return std::all_of( s.begin(), s.end(), []( char c ) {
        return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || ( c >= '0' && c <= '9' ) || c == '_';
    } );
}

bool reserved( const std::string& s, Namespace ns )
{
    if ( s == "false" || s == "true" )
        return true;
    return ns == Namespace::Toy && ( s == "lam" || s == "pr" || s == "falsum" );
}

int modal_char( char c )
{
    if ( c >= 'a' && c <= 'z' )
        return 8 + ( c - 'a' );
    if ( c >= 'A' && c <= 'Z' )
        return 34 + ( c - 'A' );
    if ( c >= '0' && c <= '9' )
        return 60 + ( c - '0' );
    if ( c == '_' )
        return 70;
    return -1;
}

char modal_char_of( std::uint8_t d )
{
    if ( d >= 8 && d <= 33 )
        return static_cast< char >( 'a' + ( d - 8 ) );
    if ( d >= 34 && d <= 59 )
        return static_cast< char >( 'A' + ( d - 34 ) );
    if ( d >= 60 && d <= 69 )
        return static_cast< char >( '0' + ( d - 60 ) );
    if ( d == 70 )
        return '_';
    return 0;
}

int toy_char( char c )
{
    if ( c >= '0' && c <= '9' )
        return 10 + ( c - '0' );
    if ( c >= 'a' && c <= 'z' )
        return 20 + ( c - 'a' );
    if ( c >= 'A' && c <= 'Z' )
        return 46 + ( c - 'A' );
    if ( c == '_' )
        return 72;
    return -1;
}

char toy_char_of( std::uint8_t d )
{
    if ( d >= 10 && d <= 19 )
        return static_cast< char >( '0' + ( d - 10 ) );
    if ( d >= 20 && d <= 45 )
        return static_cast< char >( 'a' + ( d - 20 ) );
    if ( d >= 46 && d <= 71 )
        return static_cast< char >( 'A' + ( d - 46 ) );
    if ( d == 72 )
        return '_';
    return 0;
}

// "lam(12)" -> "12"; empty when the name is not of that shape.
std::string lam_digits( const std::string& s )
{
    if ( s.size() < 6 || s.compare( 0, 4, "lam(" ) != 0 || s.back() != ')' )
        return {};
    auto digits = s.substr( 4, s.size() - 5 );
    if ( digits.empty() || digits[ 0 ] == '0' )
        return {};
    if ( !std::all_of( digits.begin(), digits.end(), []( char c ) { return c >= '0' && c <= '9'; } ) )
        return {};
    return digits;
}

void atom_symbols( const std::string& name, Namespace ns, std::vector< std::uint8_t >& out )
{
    if ( ns == Namespace::Modal )
    {
        if ( !is_ident( name ) || reserved( name, ns ) )
            throw std::invalid_argument( "not a modal atom name: '" + name + "'" );
        for ( char c : name )
            out.push_back( static_cast< std::uint8_t >( modal_char( c ) ) );
        out.push_back( modal_end );
        return;
    }
    if ( name == "falsum" )
    {
        out.push_back( toy_falsum );
        return;
    }
    if ( auto digits = lam_digits( name ); !digits.empty() )
    {
        out.push_back( toy_lam );
        for ( char c : digits )
            out.push_back( static_cast< std::uint8_t >( toy_char( c ) ) );
        out.push_back( toy_end );
        return;
    }
    if ( !is_ident( name ) || reserved( name, ns ) )
        throw std::invalid_argument( "not a toy atom name: '" + name + "'" );
    for ( char c : name )
        out.push_back( static_cast< std::uint8_t >( toy_char( c ) ) );
    out.push_back( toy_end );
}

void append_symbols( const Formula& f, Namespace ns, std::vector< std::uint8_t >& out )
{
    switch ( f.op() )
    {
    case Op::Bot:
        out.push_back( sym_bot );
        return;
    case Op::Atom:
        atom_symbols( f.name(), ns, out );
        return;
    case Op::Not:
        out.push_back( sym_not );
        append_symbols( f.child(), ns, out );
        return;
    case Op::Box:
        out.push_back( sym_box );
        append_symbols( f.child(), ns, out );
        return;
    case Op::And:
        out.push_back( sym_and );
        break;
    case Op::Or:
        out.push_back( sym_or );
        break;
    case Op::Imp:
        out.push_back( sym_imp );
        break;
    }
    append_symbols( f.lhs(), ns, out );
    append_symbols( f.rhs(), ns, out );
}

class SymbolParser
{
    const std::vector< std::uint8_t >& _s;
    Namespace _ns;
    std::size_t _pos = 0;

    std::optional< std::string > atom_tail( std::string name, std::uint8_t end, char ( *decode_char )( std::uint8_t ) )
    {
        while ( _pos < _s.size() && _s[ _pos ] != end )
        {
            char c = decode_char( _s[ _pos++ ] );
            if ( c == 0 )
                return std::nullopt;
            name.push_back( c );
        }
        if ( _pos == _s.size() )
            return std::nullopt;
        ++_pos;
        return name;
    }

    std::optional< Formula > atom( std::uint8_t d )
    {
        if ( _ns == Namespace::Modal )
        {
            char c = modal_char_of( d );
            if ( c < 'a' || c > 'z' )
                return std::nullopt;
            auto name = atom_tail( std::string( 1, c ), modal_end, modal_char_of );
            if ( !name || reserved( *name, _ns ) )
                return std::nullopt;
            return Formula::atom( *name );
        }
        if ( d == toy_falsum )
            return Formula::atom( "falsum" );
        if ( d == toy_lam )
        {
            auto digits = atom_tail( {}, toy_end, toy_char_of );
            if ( !digits || digits->empty() || ( *digits )[ 0 ] == '0' )
                return std::nullopt;
            if ( !std::all_of( digits->begin(), digits->end(), []( char c ) { return c >= '0' && c <= '9'; } ) )
                return std::nullopt;
            return Formula::atom( "lam(" + *digits + ")" );
        }
        char c = toy_char_of( d );
        if ( c < 'a' || c > 'z' )
            return std::nullopt;
        auto name = atom_tail( std::string( 1, c ), toy_end, toy_char_of );
        if ( !name || reserved( *name, _ns ) )
            return std::nullopt;
        return Formula::atom( *name );
    }

public:
    SymbolParser( const std::vector< std::uint8_t >& s, Namespace ns ) : _s{ s }, _ns{ ns } {}

    std::optional< Formula > formula()
    {
        if ( _pos >= _s.size() )
            return std::nullopt;
        auto d = _s[ _pos++ ];
        switch ( d )
        {
        case sym_bot:
            return Formula::bot();
        case sym_not:
        case sym_box: {
            auto a = formula();
            if ( !a )
                return std::nullopt;
            return d == sym_not ? Formula::neg( *a ) : Formula::box( *a );
        }
        case sym_and:
        case sym_or:
        case sym_imp: {
            auto a = formula();
            if ( !a )
                return std::nullopt;
            auto b = formula();
            if ( !b )
                return std::nullopt;
            if ( d == sym_and )
                return Formula::conj( *a, *b );
            if ( d == sym_or )
                return Formula::disj( *a, *b );
            return Formula::imp( *a, *b );
        }
        default:
            return atom( d );
        }
    }

    [[nodiscard]] bool at_end() const { return _pos == _s.size(); }
};

} // namespace

unsigned alphabet_size( Namespace ns ) { return ns == Namespace::Modal ? modal_k : toy_k; }

bool valid_atom_name( const std::string& name, Namespace ns )
{
    if ( ns == Namespace::Modal )
        return is_ident( name ) && !reserved( name, ns );
    return name == "falsum" || !lam_digits( name ).empty() || ( is_ident( name ) && !reserved( name, ns ) );
}

std::vector< std::uint8_t > symbols( const Formula& f, Namespace ns )
{
    std::vector< std::uint8_t > out;
    out.reserve( f.size() * 2 );
    append_symbols( f, ns, out );
    return out;
}

std::size_t symbol_length( const Formula& f, Namespace ns ) { return symbols( f, ns ).size(); }

Code godel_code( const Formula& f, Namespace ns )
{
    const unsigned k = alphabet_size( ns );
    Code c = 0;
    for ( auto d : symbols( f, ns ) )
        c = c * k + d;
    return c;
}

std::optional< Formula > decode( const Code& n, Namespace ns )
{
    if ( n <= 0 )
        return std::nullopt;
    const unsigned k = alphabet_size( ns );
    std::vector< std::uint8_t > digits;
    Code rest = n;
    while ( rest > 0 )
    {
        unsigned d = static_cast< unsigned >( rest % k );
        if ( d == 0 )
            d = k;
        digits.push_back( static_cast< std::uint8_t >( d ) );
        rest = ( rest - d ) / k;
    }
    std::reverse( digits.begin(), digits.end() );
    SymbolParser p{ digits, ns };
    auto f = p.formula();
    if ( !f || !p.at_end() )
        return std::nullopt;
    return f;
}

bool code_less( const Formula& a, const Formula& b, Namespace ns )
{
    if ( a == b )
        return false;
    auto sa = symbols( a, ns );
    auto sb = symbols( b, ns );
    if ( sa.size() != sb.size() )
        return sa.size() < sb.size();
    return sa < sb;
}

std::vector< Formula > subformula_closure( const Formula& f, Namespace ns )
{
    auto subs = subformulas( f );
    std::vector< std::pair< std::vector< std::uint8_t >, Formula > > keyed;
    keyed.reserve( subs.size() );
    for ( auto& s : subs )
        keyed.emplace_back( symbols( s, ns ), s );
    std::sort( keyed.begin(), keyed.end(), []( const auto& x, const auto& y ) {
        if ( x.first.size() != y.first.size() )
            return x.first.size() < y.first.size();
        return x.first < y.first;
    } );
    std::vector< Formula > out;
    out.reserve( keyed.size() );
    for ( auto& [ _, g ] : keyed )
        out.push_back( g );
    return out;
}

namespace
{

// Depth-first generation of well-formed modal symbol strings of an exact
// length, in lexicographic order.  `need` counts formulas still pending,
// including an atom whose name is being spelled.
struct CodeOrderGenerator
{
    const std::function< bool( const Formula& ) >& visit;
    std::vector< std::uint8_t > buf;
    bool stopped = false;

    bool emit()
    {
        SymbolParser p{ buf, Namespace::Modal };
        auto f = p.formula();
        if ( f && p.at_end() && !visit( *f ) )
            stopped = true;
        return !stopped;
    }

    void step( std::size_t remaining, std::size_t need, bool in_atom )
    {
        if ( stopped )
            return;
        if ( remaining == 0 )
        {
            if ( need == 0 )
                emit();
            return;
        }
        if ( need == 0 || remaining < need )
            return;
        auto push = [ & ]( std::uint8_t d, std::size_t next_need, bool next_in_atom ) {
            if ( remaining - 1 < next_need )
                return;
            buf.push_back( d );
            step( remaining - 1, next_need, next_in_atom );
            buf.pop_back();
        };
        if ( in_atom )
        {
            push( modal_end, need - 1, false );
            for ( std::uint8_t d = 8; d <= 70 && !stopped; ++d )
                push( d, need, true );
            return;
        }
        push( sym_bot, need - 1, false );
        push( sym_not, need, false );
        push( sym_and, need + 1, false );
        push( sym_or, need + 1, false );
        push( sym_imp, need + 1, false );
        push( sym_box, need, false );
        for ( std::uint8_t d = 8; d <= 33 && !stopped; ++d )
            push( d, need, true );
    }
};

} // namespace

void for_each_in_code_order( std::size_t max_symbols, const std::function< bool( const Formula& ) >& visit )
{
    CodeOrderGenerator gen{ visit, {} };
    for ( std::size_t len = 1; len <= max_symbols && !gen.stopped; ++len )
        gen.step( len, 1, false );
}

std::string to_string( const Code& c ) { return c.str(); }

Code code_from_string( const std::string& s )
{
    if ( s.empty() || !std::all_of( s.begin(), s.end(), []( char c ) { return c >= '0' && c <= '9'; } ) )
        throw std::invalid_argument( "not a natural number: '" + s + "'" );
    return Code{ s };
}

} // namespace nwb
