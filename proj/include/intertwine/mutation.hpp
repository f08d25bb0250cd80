#pragma once

#include <string>
#include <vector>

#include "intertwine/collection.hpp"
#include "intertwine/cyclic_subset.hpp"

namespace intertwine {

enum class Direction { Plus = 1, Minus = -1 };

inline int sign(Direction d) noexcept { return static_cast<int>(d); }

// Replaces `old` by `replacement`. Error codes, checked in this order:
// Precondition (c itself is not valid), NotAMember, InvalidArgument (size),
// DuplicateTarget, WrongPieceCount (replacement is not an l-ple interval),
// IntertwiningPair (offending() holds the replacement and the blocking member).
Collection exchange(const Collection& c, const CyclicSubset& old, const CyclicSubset& replacement);

// exchange(c, member, member +/- 1).
Collection mutate(const Collection& c, const CyclicSubset& member, Direction d);

struct Mutability {
  bool plus = false;
  bool minus = false;
  std::string plus_reason;   // empty when plus is legal
  std::string minus_reason;  // empty when minus is legal
};

// Throws NotAMember when `member` is not in c.
Mutability is_mutable(const Collection& c, const CyclicSubset& member);

// Shift of one slice member. Throws NotASlice when t is not a slice,
// NotAMember, NotInIndexSet, DuplicateTarget, IntertwiningPair, or NotASlice
// again when the shifted collection fails the slice test.
Collection slice_mutate(const Collection& t, const CyclicSubset& e, Direction d);

struct MutationStep {
  CyclicSubset member;
  Direction direction;
};

// Plus-mutations at the members of C_k(t) whose hat is e, lexicographically.
std::vector<MutationStep> mutation_path(const Collection& t, const CyclicSubset& e, int k);

// Applies the steps one after another; each step goes through mutate().
Collection apply_mutation_path(Collection c, const std::vector<MutationStep>& steps);

}  // namespace intertwine
