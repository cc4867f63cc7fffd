/**
 * Standard families: globes, parity simplexes (orientals) and parity cubes.
 */

#ifndef PARITYKIT_GENERATORS_HPP
#define PARITYKIT_GENERATORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "paritykit/parity_core.hpp"

namespace paritykit {

class BoundExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

enum class Family { globe, oriental, cube };

struct FamilySpec {
    Family family = Family::globe;
    std::size_t n = 0;
};

inline constexpr std::size_t max_globe = 16;
inline constexpr std::size_t max_oriental = 7;
inline constexpr std::size_t max_cube = 6;

/** Generators "e0-", "e0+", ..., "e{n-1}+", "top". */
ParityStructure globe(std::size_t n);

/**
 * Generators are vertex lists such as "013"; omitting the i-th vertex gives
 * a positive face for even i and a negative face for odd i.
 */
ParityStructure oriental(std::size_t n);

/**
 * Generators are words over {0,1,*}. Replacing the j-th star (1-indexed) by
 * 1 gives a positive face for odd j, a negative face for even j; replacing
 * by 0 the other way round.
 */
ParityStructure cube(std::size_t n);

ParityStructure generate(const FamilySpec& spec);

/** "globe", "oriental" or "cube"; throws std::invalid_argument otherwise. */
Family parse_family(const std::string& name);
std::string to_string(Family f);

}  // namespace paritykit

#endif  // PARITYKIT_GENERATORS_HPP
