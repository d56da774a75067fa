#include "nwb/parser.hpp"

#include <cctype>

namespace nwb
{

namespace
{

class Parser
{
    std::string_view _src;
    Namespace _ns;
    std::size_t _pos = 0;

    void skip_ws()
    {
        while ( _pos < _src.size() && std::isspace( static_cast< unsigned char >( _src[ _pos ] ) ) )
            ++_pos;
    }

    bool accept( std::string_view tok )
    {
        skip_ws();
        if ( _src.substr( _pos, tok.size() ) != tok )
            return false;
        _pos += tok.size();
        return true;
    }

    void expect( std::string_view tok )
    {
        if ( !accept( tok ) )
            fail( "expected '" + std::string( tok ) + "'" );
    }

    [[noreturn]] void fail( const std::string& msg ) const
    {
        if ( _pos >= _src.size() )
            throw ParseError( msg + " but input ended", _pos );
        throw ParseError( msg + " near '" + std::string( _src.substr( _pos, 8 ) ) + "'", _pos );
    }

    static bool ident_char( char c )
    {
        return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_';
    }

    Formula iff_level()
    {
        auto f = imp_level();
        while ( accept( "<->" ) )
            f = Formula::iff( f, imp_level() );
        return f;
    }

    Formula imp_level()
    {
        auto f = or_level();
        skip_ws();
        // A leading '<' belongs to "<->", which binds looser.
        if ( _src.substr( _pos, 2 ) == "->" )
        {
            _pos += 2;
            return Formula::imp( f, imp_level() );
        }
        return f;
    }

    Formula or_level()
    {
        auto f = and_level();
        while ( accept( "|" ) )
            f = Formula::disj( f, and_level() );
        return f;
    }

    Formula and_level()
    {
        auto f = unary();
        while ( accept( "&" ) )
            f = Formula::conj( f, unary() );
        return f;
    }

    Formula unary()
    {
        skip_ws();
        if ( accept( "~" ) )
            return Formula::neg( unary() );
        if ( accept( "[]" ) )
            return Formula::box( unary() );
        if ( accept( "(" ) )
        {
            auto f = iff_level();
            expect( ")" );
            return f;
        }
        return word();
    }

    Formula word()
    {
        skip_ws();
        auto start = _pos;
        if ( _pos >= _src.size() || _src[ _pos ] < 'a' || _src[ _pos ] > 'z' )
            fail( "expected a formula" );
        while ( _pos < _src.size() && ident_char( _src[ _pos ] ) )
            ++_pos;
        std::string w{ _src.substr( start, _pos - start ) };
        if ( w == "false" )
            return Formula::bot();
        if ( w == "true" )
            return Formula::top();
        if ( _ns == Namespace::Toy )
        {
            if ( w == "falsum" )
                return Formula::atom( w );
            if ( w == "pr" )
            {
                expect( "(" );
                auto f = iff_level();
                expect( ")" );
                return Formula::box( f );
            }
            if ( w == "lam" )
            {
                expect( "(" );
                skip_ws();
                auto ds = _pos;
                while ( _pos < _src.size() && std::isdigit( static_cast< unsigned char >( _src[ _pos ] ) ) )
                    ++_pos;
                std::string digits{ _src.substr( ds, _pos - ds ) };
                if ( digits.empty() || digits[ 0 ] == '0' )
                {
                    _pos = ds;
                    fail( "lam index must be a positive integer without leading zeros" );
                }
                expect( ")" );
                return Formula::atom( "lam(" + digits + ")" );
            }
        }
        if ( !valid_atom_name( w, _ns ) )
        {
            _pos = start;
            fail( "reserved word '" + w + "' used as an atom" );
        }
        return Formula::atom( w );
    }

public:
    Parser( std::string_view src, Namespace ns ) : _src{ src }, _ns{ ns } {}

    Formula run()
    {
        auto f = iff_level();
        skip_ws();
        if ( _pos != _src.size() )
            fail( "unexpected trailing input" );
        return f;
    }
};

// Binding strength: 1 ->, 2 |, 3 &, 4 prefix operators and atoms.
int strength( Op op )
{
    switch ( op )
    {
    case Op::Imp:
        return 1;
    case Op::Or:
        return 2;
    case Op::And:
        return 3;
    default:
        return 4;
    }
}

void emit( const Formula& f, Namespace ns, int min, std::string& out )
{
    bool paren = strength( f.op() ) < min;
    if ( paren )
        out += '(';
    switch ( f.op() )
    {
    case Op::Bot:
        out += "false";
        break;
    case Op::Atom:
        out += f.name();
        break;
    case Op::Not:
        out += '~';
        emit( f.child(), ns, 4, out );
        break;
    case Op::Box:
        if ( ns == Namespace::Toy )
        {
            out += "pr(";
            emit( f.child(), ns, 0, out );
            out += ')';
        }
        else
        {
            out += "[]";
            emit( f.child(), ns, 4, out );
        }
        break;
    case Op::And:
        emit( f.lhs(), ns, 3, out );
        out += " & ";
        emit( f.rhs(), ns, 4, out );
        break;
    case Op::Or:
        emit( f.lhs(), ns, 2, out );
        out += " | ";
        emit( f.rhs(), ns, 3, out );
        break;
    case Op::Imp:
        emit( f.lhs(), ns, 2, out );
        out += " -> ";
        emit( f.rhs(), ns, 1, out );
        break;
    }
    if ( paren )
        out += ')';
}

} // namespace

Formula parse( std::string_view text, Namespace ns ) { return Parser{ text, ns }.run(); }

std::string render( const Formula& f, Namespace ns )
{
    std::string out;
    emit( f, ns, 0, out );
    return out;
}

} // namespace nwb
