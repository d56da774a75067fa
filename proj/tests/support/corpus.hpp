#pragma once

// Curated theorems with derivations and non-theorems, shared by the unit
// tests and the acceptance run.

#include "nwb/parser.hpp"
#include "nwb/prover.hpp"

#include <string>
#include <vector>

namespace nwb::test
{

struct TheoremItem
{
    std::string label;
    Formula theorem;
    Derivation proof;
};

struct NonTheoremItem
{
    std::string label;
    Logic logic;
    Formula formula;
};

inline Step step( const char* f, Rule r, int i = -1, int j = -1 ) { return { parse( f ), r, i, j }; }

inline std::vector< TheoremItem > theorem_corpus()
{
    std::vector< TheoremItem > out;
    auto add = [ & ]( const char* label, Logic l, const char* thm, std::vector< Step > steps ) {
        out.push_back( { label, parse( thm ), Derivation{ l, std::move( steps ) } } );
    };

    add( "EN: box top", Logic::EN, "[]true", { step( "true", Rule::Taut ), step( "[]true", Rule::Nec, 0 ) } );
    add( "EN: box commutes with conjunction (RE)", Logic::EN, "[](p & q) <-> [](q & p)",
         { step( "p & q <-> q & p", Rule::Taut ), step( "[](p & q) <-> [](q & p)", Rule::RE, 0 ) } );
    add( "EN: box commutes with disjunction (RE)", Logic::EN, "[](p | q) <-> [](q | p)",
         { step( "p | q <-> q | p", Rule::Taut ), step( "[](p | q) <-> [](q | p)", Rule::RE, 0 ) } );
    add( "EN: double negation under box", Logic::EN, "[]~~p <-> []p",
         { step( "~~p <-> p", Rule::Taut ), step( "[]~~p <-> []p", Rule::RE, 0 ) } );
    add( "EN: nested box top", Logic::EN, "[][]true",
         { step( "true", Rule::Taut ), step( "[]true", Rule::Nec, 0 ), step( "[][]true", Rule::Nec, 1 ) } );
    add( "EN: box of p -> p", Logic::EN, "[](p -> p)", { step( "p -> p", Rule::Taut ), step( "[](p -> p)", Rule::Nec, 0 ) } );
    add( "EN: box p or not box p", Logic::EN, "[]p | ~[]p", { step( "[]p | ~[]p", Rule::Taut ) } );

    add( "ECN: aggregation axiom", Logic::ECN, "[]p & []q -> [](p & q)", { step( "[]p & []q -> [](p & q)", Rule::AxC ) } );
    add( "ECN: three-way aggregation", Logic::ECN, "[]p & []q & []r -> [](p & q & r)",
         { step( "[]p & []q -> [](p & q)", Rule::AxC ),
           step( "[](p & q) & []r -> [](p & q & r)", Rule::AxC ),
           step( "([]p & []q -> [](p & q)) -> ([](p & q) & []r -> [](p & q & r)) -> []p & []q & []r -> [](p & q & r)",
                 Rule::Taut ),
           step( "([](p & q) & []r -> [](p & q & r)) -> []p & []q & []r -> [](p & q & r)", Rule::MP, 0, 2 ),
           step( "[]p & []q & []r -> [](p & q & r)", Rule::MP, 1, 3 ) } );
    add( "ECN: commuted conjunction under box", Logic::ECN, "[](p & q) <-> [](q & p)",
         { step( "p & q <-> q & p", Rule::Taut ), step( "[](p & q) <-> [](q & p)", Rule::RE, 0 ) } );

    add( "ENP: consistency axiom", Logic::ENP, "~[]false", { step( "~[]false", Rule::AxP ) } );
    add( "ENP: box of not top fails", Logic::ENP, "~[]~true",
         { step( "false <-> ~true", Rule::Taut ),
           step( "[]false <-> []~true", Rule::RE, 0 ),
           step( "~[]false", Rule::AxP ),
           step( "([]false <-> []~true) -> ~[]false -> ~[]~true", Rule::Taut ),
           step( "~[]false -> ~[]~true", Rule::MP, 1, 3 ),
           step( "~[]~true", Rule::MP, 2, 4 ) } );

    add( "END: complement axiom", Logic::END, "~([]p & []~p)", { step( "~([]p & []~p)", Rule::AxD ) } );
    add( "END: complement axiom on q", Logic::END, "~([]q & []~q)", { step( "~([]q & []~q)", Rule::AxD ) } );
    add( "END: consistency derived", Logic::END, "~[]false",
         { step( "true", Rule::Taut ),
           step( "[]true", Rule::Nec, 0 ),
           step( "false <-> ~true", Rule::Taut ),
           step( "[]false <-> []~true", Rule::RE, 2 ),
           step( "~([]true & []~true)", Rule::AxD ),
           step( "[]true -> ~([]true & []~true) -> ([]false <-> []~true) -> ~[]false", Rule::Taut ),
           step( "~([]true & []~true) -> ([]false <-> []~true) -> ~[]false", Rule::MP, 1, 5 ),
           step( "([]false <-> []~true) -> ~[]false", Rule::MP, 4, 6 ),
           step( "~[]false", Rule::MP, 3, 7 ) } );

    add( "ECNP: consistency axiom", Logic::ECNP, "~[]false", { step( "~[]false", Rule::AxP ) } );
    add( "ECNP: complement principle derived", Logic::ECNP, "~([]p & []~p)",
         { step( "[]p & []~p -> [](p & ~p)", Rule::AxC ),
           step( "p & ~p <-> false", Rule::Taut ),
           step( "[](p & ~p) <-> []false", Rule::RE, 1 ),
           step( "~[]false", Rule::AxP ),
           step( "([]p & []~p -> [](p & ~p)) -> ([](p & ~p) <-> []false) -> ~[]false -> ~([]p & []~p)", Rule::Taut ),
           step( "([](p & ~p) <-> []false) -> ~[]false -> ~([]p & []~p)", Rule::MP, 0, 4 ),
           step( "~[]false -> ~([]p & []~p)", Rule::MP, 2, 5 ),
           step( "~([]p & []~p)", Rule::MP, 3, 6 ) } );
    return out;
}

inline std::vector< NonTheoremItem > non_theorem_corpus()
{
    std::vector< NonTheoremItem > out;
    auto add = [ & ]( const char* label, Logic l, const char* f ) { out.push_back( { label, l, parse( f ) } ); };
    add( "EN: aggregation fails", Logic::EN, "[]p & []q -> [](p & q)" );
    add( "EN: monotonicity fails", Logic::EN, "[](p & q) -> []p" );
    add( "ENP: complement principle fails", Logic::ENP, "~([]p & []~p)" );
    add( "ECN: consistency fails", Logic::ECN, "~[]false" );
    add( "EN: consistency fails", Logic::EN, "~[]false" );
    add( "END: aggregation fails", Logic::END, "[]p & []q -> [](p & q)" );
    add( "ECN: monotonicity fails", Logic::ECN, "[](p & q) -> []p" );
    add( "ENP: aggregation fails", Logic::ENP, "[]p & []q -> [](p & q)" );
    add( "EN: reflexivity fails", Logic::EN, "[]p -> p" );
    add( "ECNP: transitivity fails", Logic::ECNP, "[]p -> [][]p" );
    add( "EN: p -> []p fails", Logic::EN, "p -> []p" );
    add( "END: box p or box not p fails", Logic::END, "[]p | []~p" );
    return out;
}

} // namespace nwb::test
