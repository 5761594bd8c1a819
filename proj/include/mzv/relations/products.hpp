#ifndef MZV_RELATIONS_PRODUCTS_HPP
#define MZV_RELATIONS_PRODUCTS_HPP

#include <mzv/core/formal_sum.hpp>
#include <mzv/core/index.hpp>
#include <mzv/core/word.hpp>

namespace mzv
{

// Harmonic (quasi-shuffle) product of two indices:
//   (a,U) * (b,V) = (a, U*(b,V)) + (b, (a,U)*V) + (a+b, U*V).
// Admissibility is not required.
IndexSum stuffle(const MzvIndex &u, const MzvIndex &v);

// Shuffle product of words: the sum over all order-preserving interleavings.
WordSum shuffle(const BinaryWord &a, const BinaryWord &b);

// shuffle(index_to_word(u), index_to_word(v)) read back as indices.
IndexSum shuffle_indices(const MzvIndex &u, const MzvIndex &v);

// Converts a word sum whose words all end in x1; throws IndexError otherwise.
IndexSum to_index_sum(const WordSum &words);

} // namespace mzv

#endif
