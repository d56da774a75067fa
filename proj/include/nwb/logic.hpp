#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nwb
{

enum class Logic : std::uint8_t
{
    EN,
    ECN,
    ENP,
    END,
    ECNP,
};

inline constexpr std::array< Logic, 5 > all_logics{ Logic::EN, Logic::ECN, Logic::ENP, Logic::END, Logic::ECNP };

[[nodiscard]] std::string_view name( Logic l );
[[nodiscard]] std::optional< Logic > logic_from_name( std::string_view s );

// Theorem-set inclusion: every theorem of a is a theorem of b.
// EN <= ENP <= END, EN <= ECN <= ECNP, ENP <= ECNP, and reflexive.
[[nodiscard]] bool included( Logic a, Logic b );

// Frame conditions imposed on top of the EN frame condition.
[[nodiscard]] constexpr bool has_closure( Logic l ) { return l == Logic::ECN || l == Logic::ECNP; }
[[nodiscard]] constexpr bool has_nonempty( Logic l ) { return l == Logic::ENP || l == Logic::ECNP; }
[[nodiscard]] constexpr bool has_complement_free( Logic l ) { return l == Logic::END; }

} // namespace nwb
