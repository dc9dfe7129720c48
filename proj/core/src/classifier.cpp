#include "bipsym/classifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "bipsym/error.hpp"

namespace bipsym {
namespace {

using Lengths = std::vector<int>;

int count(const Lengths& xs, std::int64_t len) {
  return static_cast<int>(std::count(xs.begin(), xs.end(), len));
}

bool all_in(const Lengths& xs, std::initializer_list<std::int64_t> allowed) {
  return std::all_of(xs.begin(), xs.end(), [&](int x) {
    return std::find(allowed.begin(), allowed.end(), x) != allowed.end();
  });
}

// Distinct cycle lengths other than r.
std::vector<std::int64_t> exceptional(const Lengths& xs, std::int64_t r) {
  std::set<std::int64_t> out;
  for (int x : xs) {
    if (x != r) out.insert(x);
  }
  return {out.begin(), out.end()};
}

// One reading of the signature; `v` is whichever part plays the role of V.
struct View {
  std::int64_t r;
  bool preserving;
  int fixed_v;
  int fixed_w;
  int n;  // size of the V-role part
  const Lengths& pv;
  const Lengths& pw;
  const Lengths& mixed;

  bool no_fixed() const { return fixed_v == 0 && fixed_w == 0; }
};

struct Predicate {
  Orientation orientation;
  int number;
  char sub;
  std::function<bool(const View&)> holds;
};

// Each predicate lists the exceptional structure of its case; every other
// non-fixed vertex must sit in an r-cycle (pure r-cycles need a preserving
// action, mixed ones a swapping action).
const std::vector<Predicate>& predicates() {
  static const std::vector<Predicate> table = {
      {Orientation::Preserving, 1, '\0',
       [](const View& s) {
         return s.no_fixed() && all_in(s.pv, {s.r}) && all_in(s.pw, {s.r}) &&
                all_in(s.mixed, {s.r});
       }},
      {Orientation::Preserving, 2, '\0',
       [](const View& s) {
         return s.preserving && s.fixed_v >= 1 && s.fixed_w == 0 &&
                all_in(s.pv, {s.r}) && all_in(s.pw, {s.r});
       }},
      {Orientation::Preserving, 3, '\0',
       [](const View& s) {
         return s.preserving && s.fixed_v <= 2 && s.fixed_w <= 2 &&
                s.fixed_v + s.fixed_w >= 1 && all_in(s.pv, {s.r}) &&
                all_in(s.pw, {s.r});
       }},
      {Orientation::Preserving, 4, '\0',
       [](const View& s) {
         if (!s.preserving || !s.no_fixed()) return false;
         const auto j = exceptional(s.pv, s.r);
         return j.size() == 1 && j[0] > 1 && j[0] < s.r && s.r % j[0] == 0 &&
                all_in(s.pw, {s.r});
       }},
      {Orientation::Preserving, 5, '\0',
       [](const View& s) {
         if (!s.preserving || !s.no_fixed()) return false;
         const auto jk = exceptional(s.pv, s.r);
         return jk.size() == 2 && jk[0] > 1 && jk[1] < s.r &&
                std::lcm(jk[0], jk[1]) == s.r && all_in(s.pw, {s.r});
       }},
      {Orientation::Preserving, 6, '\0',
       [](const View& s) {
         if (!s.preserving || !s.no_fixed()) return false;
         const auto j = exceptional(s.pv, s.r);
         const auto k = exceptional(s.pw, s.r);
         return j.size() == 1 && k.size() == 1 && j[0] > 1 && k[0] > 1 &&
                std::lcm(j[0], k[0]) == s.r;
       }},
      {Orientation::Preserving, 7, '\0',
       [](const View& s) {
         return s.preserving && s.no_fixed() && count(s.pv, 2) == 1 &&
                count(s.pw, 2) == 1 && all_in(s.pv, {2, s.r}) &&
                all_in(s.pw, {2, s.r});
       }},
      {Orientation::Preserving, 8, '\0',
       [](const View& s) {
         const std::int64_t half = s.r / 2;
         return s.preserving && s.no_fixed() && s.r % 4 == 2 && half > 1 &&
                count(s.pv, 2) == 1 && count(s.pw, 2) == 1 &&
                count(s.pv, half) >= 1 && all_in(s.pv, {2, half, s.r}) &&
                all_in(s.pw, {2, s.r});
       }},
      {Orientation::Preserving, 9, '\0',
       [](const View& s) {
         if (s.preserving || s.mixed.empty()) return false;
         // With r = 4 every cycle is a 4-cycle and one of them is read as
         // the exceptional one.
         if (s.r == 4) return all_in(s.mixed, {4});
         return count(s.mixed, 4) == 1 && all_in(s.mixed, {4, s.r});
       }},
      {Orientation::Reversing, 10, '\0',
       [](const View& s) {
         return s.preserving && s.no_fixed() && all_in(s.pv, {s.r}) &&
                all_in(s.pw, {s.r});
       }},
      {Orientation::Reversing, 11, '\0',
       [](const View& s) {
         return s.r == 2 && s.preserving && s.fixed_v == s.n &&
                s.fixed_w <= 2 && all_in(s.pw, {2});
       }},
      {Orientation::Reversing, 12, 'a',
       [](const View& s) {
         return s.preserving && s.fixed_v <= 2 && s.fixed_w == 0 &&
                count(s.pw, 2) == 1 && all_in(s.pw, {2, s.r}) &&
                all_in(s.pv, {s.r});
       }},
      {Orientation::Reversing, 12, 'b',
       [](const View& s) {
         return s.preserving && s.fixed_v <= 2 && s.fixed_w == 0 &&
                count(s.pv, 2) >= 1 && all_in(s.pv, {2, s.r}) &&
                all_in(s.pw, {s.r});
       }},
      {Orientation::Reversing, 12, 'c',
       [](const View& s) {
         const std::int64_t half = s.r / 2;
         return s.preserving && s.fixed_v <= 2 && s.fixed_w == 0 &&
                s.r % 4 == 2 && half > 1 && all_in(s.pv, {2, s.r}) &&
                all_in(s.pw, {half});
       }},
      {Orientation::Reversing, 12, 'd',
       [](const View& s) {
         const std::int64_t half = s.r / 2;
         return s.preserving && s.fixed_v <= 2 && s.fixed_w == 0 &&
                s.r % 4 == 2 && half > 1 && all_in(s.pv, {half}) &&
                count(s.pw, 2) <= 1 && all_in(s.pw, {2, s.r});
       }},
      {Orientation::Reversing, 13, '\0',
       [](const View& s) {
         return !s.preserving && s.r % 4 == 0 && count(s.mixed, 2) <= 2 &&
                all_in(s.mixed, {2, s.r});
       }},
  };
  return table;
}

View view_of(const CycleSignature& sig) {
  return View{sig.order,
              sig.side_action == SideAction::Preserving,
              sig.fixed_v,
              sig.fixed_w,
              sig.shape.n(),
              sig.pure_v_cycles,
              sig.pure_w_cycles,
              sig.mixed_cycles};
}

}  // namespace

std::string CaseId::label() const {
  std::string out = orientation == Orientation::Preserving ? "OP" : "OR";
  out += std::to_string(number);
  if (sub != '\0') out += sub;
  return out;
}

std::vector<std::string> RealizabilityVerdict::labels(Orientation o) const {
  std::vector<std::string> out;
  for (const CaseId& c : cases(o)) {
    std::string l = c.label();
    if (std::find(out.begin(), out.end(), l) == out.end()) {
      out.push_back(std::move(l));
    }
  }
  return out;
}

bool RealizabilityVerdict::matches(const std::string& label) const {
  auto has = [&](const std::vector<CaseId>& cs) {
    return std::any_of(cs.begin(), cs.end(),
                       [&](const CaseId& c) { return c.label() == label; });
  };
  return has(op_cases) || has(or_cases);
}

RealizabilityVerdict classify(const CycleSignature& sig) {
  if (!sig.shape.in_theorem_scope()) {
    throw Error(ErrorCode::kOutOfTheoremScope,
                "classification needs n > 2 and m > 2, got K_{" +
                    std::to_string(sig.shape.n()) + "," +
                    std::to_string(sig.shape.m()) + "}");
  }

  RealizabilityVerdict verdict;
  if (sig.order == 1) {
    // The identity is induced by the identity homeomorphism; it is filed
    // under case 2 (every vertex fixed, nothing left outside r-cycles),
    // which reads the same with either part as V.
    verdict.op_cases.push_back({Orientation::Preserving, 2, '\0', false});
    verdict.op_cases.push_back({Orientation::Preserving, 2, '\0', true});
    return verdict;
  }

  const CycleSignature swapped = interchange_parts(sig);
  const View direct = view_of(sig);
  const View flipped = view_of(swapped);
  const bool even = sig.order % 2 == 0;

  for (const Predicate& p : predicates()) {
    if (p.orientation == Orientation::Reversing && !even) continue;
    auto& out = p.orientation == Orientation::Preserving ? verdict.op_cases
                                                         : verdict.or_cases;
    if (p.holds(direct)) out.push_back({p.orientation, p.number, p.sub, false});
    if (p.holds(flipped)) out.push_back({p.orientation, p.number, p.sub, true});
  }
  return verdict;
}

RealizabilityVerdict classify_aut(const BipartiteAutomorphism& aut) {
  return classify(signature(aut));
}

}  // namespace bipsym
