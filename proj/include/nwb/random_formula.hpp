#pragma once

#include "nwb/formula.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nwb
{

struct RandomFormulaOptions
{
    std::vector< std::string > atoms{ "p", "q" };
    int max_depth = 6;        // height of the syntax tree
    int max_modal_depth = -1; // -1: no limit
    int max_connectives = -1; // -1: no limit; counts every non-leaf node
    bool allow_bot = true;
};

// Deterministic for a fixed generator state.
class RandomFormula
{
public:
    explicit RandomFormula( std::uint64_t seed, RandomFormulaOptions opt = {} );

    [[nodiscard]] Formula next();

private:
    std::mt19937_64 _rng;
    RandomFormulaOptions _opt;

    Formula gen( int depth, int modal, int& budget );
    Formula leaf();
};

} // namespace nwb
