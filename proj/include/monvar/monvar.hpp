// monvar - equational reasoning for monoid varieties
//
// Umbrella header.

#ifndef MONVAR_MONVAR_HPP_
#define MONVAR_MONVAR_HPP_

#include "identities.hpp"  // IWYU pragma: export
#include "monoids.hpp"     // IWYU pragma: export
#include "reductions.hpp"  // IWYU pragma: export
#include "rewrite.hpp"     // IWYU pragma: export
#include "word.hpp"        // IWYU pragma: export
#include "words.hpp"       // IWYU pragma: export

#endif  // MONVAR_MONVAR_HPP_
