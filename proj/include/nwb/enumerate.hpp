#pragma once

// A catalog of formulas the countermodel search refutes, taken in code
// order, each paired with a countermodel.  Countermodel worlds are relabeled
// onto consecutive blocks 1..n1, n1+1..n2, ... so that the blocks partition
// an initial segment of the positive integers.

#include "nwb/decide.hpp"
#include "nwb/formula.hpp"
#include "nwb/logic.hpp"
#include "nwb/neighborhood.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nwb
{

struct CatalogEntry
{
    int k = 0;
    Formula formula;
    Model model; // worlds are exactly lo..hi
    World witness = 0;
    World lo = 0;
    World hi = 0;
};

// A formula whose search hit a resource limit.  It is neither counted as
// provable nor as refuted; entries_before is the number of entries preceding
// it in code order.
struct CatalogGap
{
    Formula formula;
    std::string reason;
    int entries_before = 0;
};

struct Catalog
{
    Logic logic = Logic::EN;
    std::vector< CatalogEntry > entries;
    std::vector< CatalogGap > gaps;

    [[nodiscard]] World total_worlds() const { return entries.empty() ? 0 : entries.back().hi; }
};

struct CatalogOptions
{
    std::uint64_t node_budget = default_node_budget();
    std::size_t max_symbols = 40; // stop scanning code order beyond this length
};

[[nodiscard]] Catalog build_catalog( Logic l, int count, const CatalogOptions& opt = {} );

// Same block layout for a given list of formulas instead of code order;
// formulas without a countermodel are dropped.
[[nodiscard]] Catalog catalog_of( Logic l, const std::vector< Formula >& formulas, const CatalogOptions& opt = {} );

struct Owner
{
    int k;
    World original; // world label before relabeling
};

[[nodiscard]] std::optional< Owner > world_owner( const Catalog& cat, World i );

// Shifts every world label of m by offset.
[[nodiscard]] Model relabel( const Model& m, World offset );

} // namespace nwb
