#include "intertwine/mutation.hpp"

#include <string>

#include "intertwine/error.hpp"
#include "intertwine/intertwining.hpp"
#include "intertwine/slice.hpp"

namespace intertwine {

Collection exchange(const Collection& c, const CyclicSubset& old, const CyclicSubset& replacement) {
  if (auto bad = find_intertwining_pair(c)) {
    throw Error(ErrorCode::Precondition,
                "input collection is not valid: " + bad->first.str() + " and " +
                    bad->second.str() + " intertwine",
                {bad->first.elements(), bad->second.elements()});
  }
  if (!c.contains(old)) {
    throw Error(ErrorCode::NotAMember, old.str() + " is not a member", {old.elements()});
  }
  if (replacement.n() != c.n() || replacement.size() != c.k()) {
    throw Error(ErrorCode::InvalidArgument, replacement.str() + " has the wrong size",
                {replacement.elements()});
  }
  if (c.contains(replacement)) {
    throw Error(ErrorCode::DuplicateTarget, replacement.str() + " is already a member",
                {replacement.elements()});
  }
  const auto pieces = decompose(replacement).count();
  if (pieces != static_cast<std::size_t>(c.l())) {
    throw Error(ErrorCode::WrongPieceCount,
                replacement.str() + " has " + std::to_string(pieces) + " pieces, expected " +
                    std::to_string(c.l()),
                {replacement.elements()});
  }
  for (const CyclicSubset& m : c.members()) {
    if (m == old) continue;
    if (pair_l_intertwines(m, replacement, c.l())) {
      throw Error(ErrorCode::IntertwiningPair, replacement.str() + " intertwines " + m.str(),
                  {replacement.elements(), m.elements()});
    }
  }
  return c.exchanged(old, replacement);
}

Collection mutate(const Collection& c, const CyclicSubset& member, Direction d) {
  return exchange(c, member, shift(member, sign(d)));
}

Mutability is_mutable(const Collection& c, const CyclicSubset& member) {
  if (!c.contains(member)) {
    throw Error(ErrorCode::NotAMember, member.str() + " is not a member", {member.elements()});
  }
  Mutability out;
  auto probe = [&](Direction d, bool& ok, std::string& reason) {
    try {
      mutate(c, member, d);
      ok = true;
    } catch (const Error& e) {
      ok = false;
      reason = std::string(to_string(e.code())) + ": " + e.what();
    }
  };
  probe(Direction::Plus, out.plus, out.plus_reason);
  probe(Direction::Minus, out.minus, out.minus_reason);
  return out;
}

Collection slice_mutate(const Collection& t, const CyclicSubset& e, Direction d) {
  if (!is_slice(t)) throw Error(ErrorCode::NotASlice, "input collection is not a slice");
  if (!t.contains(e)) throw Error(ErrorCode::NotAMember, e.str() + " is not a member", {e.elements()});
  const CyclicSubset target = shift(e, sign(d));
  if (!in_index_set(target, IndexVariant::Cyclic)) {
    throw Error(ErrorCode::NotInIndexSet, target.str() + " is not in the cyclic index set",
                {target.elements()});
  }
  if (t.contains(target)) {
    throw Error(ErrorCode::DuplicateTarget, target.str() + " is already a member",
                {target.elements()});
  }
  for (const CyclicSubset& m : t.members()) {
    if (m != e && intertwines_either(m, target)) {
      throw Error(ErrorCode::IntertwiningPair, target.str() + " intertwines " + m.str(),
                  {target.elements(), m.elements()});
    }
  }
  Collection next = t.exchanged(e, target);
  if (!is_slice(next)) {
    throw Error(ErrorCode::NotASlice, "shifting " + e.str() + " does not give a slice",
                {e.elements()});
  }
  return next;
}

std::vector<MutationStep> mutation_path(const Collection& t, const CyclicSubset& e, int k) {
  slice_mutate(t, e, Direction::Plus);
  std::vector<MutationStep> steps;
  const Collection ck = construct_ck(t, k);
  for (const CyclicSubset& m : ck.members()) {
    if (hat(m) == e) steps.push_back({m, Direction::Plus});
  }
  return steps;
}

Collection apply_mutation_path(Collection c, const std::vector<MutationStep>& steps) {
  for (const MutationStep& s : steps) c = mutate(c, s.member, s.direction);
  return c;
}

}  // namespace intertwine
