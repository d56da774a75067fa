#include "nwb/prover.hpp"

#include "nwb/propositional.hpp"

namespace nwb
{

namespace
{

constexpr std::pair< Rule, std::string_view > rule_names[] = {
    { Rule::Taut, "Taut" }, { Rule::AxC, "AxC" }, { Rule::AxP, "AxP" }, { Rule::AxD, "AxD" },
    { Rule::MP, "MP" },     { Rule::Nec, "Nec" }, { Rule::RE, "RE" },
};

} // namespace

std::string_view name( Rule r )
{
    for ( auto& [ rule, s ] : rule_names )
        if ( rule == r )
            return s;
    return "?";
}

std::optional< Rule > rule_from_name( std::string_view s )
{
    for ( auto& [ rule, n ] : rule_names )
        if ( n == s )
            return rule;
    return std::nullopt;
}

bool rule_allowed( Logic l, Rule r )
{
    switch ( r )
    {
    case Rule::AxC:
        return has_closure( l );
    case Rule::AxP:
        return has_nonempty( l ) || l == Logic::END;
    case Rule::AxD:
        return l == Logic::END;
    default:
        return true;
    }
}

bool is_axiom_c( const Formula& f )
{
    if ( !f.is( Op::Imp ) )
        return false;
    const auto& ante = f.lhs();
    const auto& cons = f.rhs();
    if ( !ante.is( Op::And ) || !ante.lhs().is( Op::Box ) || !ante.rhs().is( Op::Box ) )
        return false;
    if ( !cons.is( Op::Box ) || !cons.child().is( Op::And ) )
        return false;
    return cons.child().lhs() == ante.lhs().child() && cons.child().rhs() == ante.rhs().child();
}

bool is_axiom_p( const Formula& f ) { return f == Formula::neg( Formula::box( Formula::bot() ) ); }

bool is_axiom_d( const Formula& f )
{
    if ( !f.is( Op::Not ) || !f.child().is( Op::And ) )
        return false;
    const auto& l = f.child().lhs();
    const auto& r = f.child().rhs();
    if ( !l.is( Op::Box ) || !r.is( Op::Box ) || !r.child().is( Op::Not ) )
        return false;
    return r.child().child() == l.child();
}

DerivationCheck check_derivation( const Derivation& d )
{
    const auto& steps = d.steps;
    for ( std::size_t k = 0; k < steps.size(); ++k )
    {
        const auto& s = steps[ k ];
        auto reject = [ & ]( Rejected::Kind kind, std::string why ) {
            return Rejected{ kind, k, std::move( why ) };
        };
        auto premise_ok = [ & ]( int idx ) { return idx >= 0 && static_cast< std::size_t >( idx ) < k; };

        if ( !rule_allowed( d.logic, s.rule ) )
            return reject( Rejected::Kind::NotPermitted,
                           std::string( name( s.rule ) ) + " is not available in " + std::string( name( d.logic ) ) );

        switch ( s.rule )
        {
        case Rule::Taut:
            if ( !is_tautology( s.formula ) )
                return reject( Rejected::Kind::Invalid, "not a propositional tautology" );
            break;
        case Rule::AxC:
            if ( !is_axiom_c( s.formula ) )
                return reject( Rejected::Kind::Invalid, "not an instance of []A & []B -> [](A & B)" );
            break;
        case Rule::AxP:
            if ( !is_axiom_p( s.formula ) )
                return reject( Rejected::Kind::Invalid, "not ~[]false" );
            break;
        case Rule::AxD:
            if ( !is_axiom_d( s.formula ) )
                return reject( Rejected::Kind::Invalid, "not an instance of ~([]A & []~A)" );
            break;
        case Rule::MP:
            if ( !premise_ok( s.i ) || !premise_ok( s.j ) )
                return reject( Rejected::Kind::BadIndex, "MP premises must be earlier steps" );
            if ( steps[ s.j ].formula != Formula::imp( steps[ s.i ].formula, s.formula ) )
                return reject( Rejected::Kind::Invalid, "step " + std::to_string( s.j ) + " is not step " +
                                                            std::to_string( s.i ) + " -> this formula" );
            break;
        case Rule::Nec:
            if ( !premise_ok( s.i ) )
                return reject( Rejected::Kind::BadIndex, "Nec premise must be an earlier step" );
            if ( s.formula != Formula::box( steps[ s.i ].formula ) )
                return reject( Rejected::Kind::Invalid, "not [] of step " + std::to_string( s.i ) );
            break;
        case Rule::RE: {
            if ( !premise_ok( s.i ) )
                return reject( Rejected::Kind::BadIndex, "RE premise must be an earlier step" );
            Formula a, b;
            if ( !steps[ s.i ].formula.as_iff( a, b ) )
                return reject( Rejected::Kind::Invalid, "step " + std::to_string( s.i ) + " is not a biconditional" );
            if ( s.formula != Formula::iff( Formula::box( a ), Formula::box( b ) ) )
                return reject( Rejected::Kind::Invalid, "not []A <-> []B for step " + std::to_string( s.i ) );
            break;
        }
        }
    }
    return Accepted{};
}

} // namespace nwb
