#include "specht/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace specht {

namespace {

void push_run_up(std::vector<int>& letters, int from, int to) {
  for (int r = from; r <= to; ++r) letters.push_back(r);
}

LegSet main_target(int i, const LegSet& A) {
  std::vector<int> t = A.entries();
  t[i - 1] = i;
  return LegSet(std::move(t));
}

// letters of the main table (Prop. irr); empty optional-like flag via found
bool main_letters(int i, const LegSet& A, const Params& p, std::vector<int>& letters) {
  const int ai = A.at(i);
  const int m = A.size();
  const int icls = p.res_class(i);
  const int acls = p.res_class(ai);
  const bool last = i == m;
  const int next = last ? 0 : A.at(i + 1);

  if (acls == 1) {
    const bool tight = !last && next == ai + 1;
    const bool loose = (!last && next >= ai + 2) || (last && ai < p.n);
    if (!tight && !loose) return false;  // i = m with a_m = n: no word exists
    if (icls == 1) {
      if (tight) {
        letters.push_back(ai);
        push_run_up(letters, i + 1, ai - 1);
      } else {
        push_run_up(letters, i + 1, ai);
      }
    } else if (icls == 2) {
      if (tight) {
        letters.push_back(ai);
        letters.push_back(i);
        letters.push_back(i - 1);
        push_run_up(letters, i + 1, ai - 1);
      } else {
        letters.push_back(i);
        letters.push_back(i - 1);
        push_run_up(letters, i + 1, ai);
      }
    } else {
      if (tight) {
        letters.push_back(ai);
        push_run_up(letters, i, ai - 1);
      } else {
        push_run_up(letters, i, ai);
      }
    }
    return true;
  }

  if (acls == 2) {
    if (icls == 1) {
      if (ai == i + 1) {
        // x = psi_{i+1}^2, defined only when the climb stays inside 1..n-1
        const bool tight = !last && next == i + 2;
        const bool loose = (!last && next > i + 2) || (last && ai < p.n);
        if (!tight && !loose) return false;
        letters.push_back(i + 1);
        letters.push_back(i + 1);
      } else {
        push_run_up(letters, i + 1, ai - 2);
      }
    } else if (icls == 2) {
      letters.push_back(i);
      letters.push_back(i - 1);
      push_run_up(letters, i + 1, ai - 2);
    } else {
      push_run_up(letters, i, ai - 2);
    }
    return true;
  }

  // a_i in a generic class
  if (icls == 1) {
    push_run_up(letters, i + 1, ai - 1);
  } else if (icls == 2) {
    letters.push_back(i);
    letters.push_back(i - 1);
    push_run_up(letters, i + 1, ai - 1);
  } else {
    push_run_up(letters, i, ai - 1);
  }
  return true;
}

// fallback table for kappa_2 = kappa_1 - 1, i = 1: target v(2,a_2,...)
bool edge_letters(const LegSet& A, const Params& p, std::vector<int>& letters) {
  const int a1 = A.at(1);
  const int m = A.size();
  if (a1 == 2) return false;  // no word reaches v(1,...) or v(2,...) here
  const int r = mod_e(a1, p.e);
  if (r == 0) {
    const bool tight = m >= 2 && A.at(2) == a1 + 1;
    const bool loose = (m >= 2 && A.at(2) > a1 + 1) || (m == 1 && a1 < p.n);
    if (!tight && !loose) return false;
    if (tight) {
      letters.push_back(a1);
      push_run_up(letters, 2, a1 - 1);
    } else {
      push_run_up(letters, 2, a1);
    }
  } else if (r == 1) {
    push_run_up(letters, 2, a1 - 2);
  } else {
    push_run_up(letters, 2, a1 - 1);
  }
  return true;
}

}  // namespace

IrrWord irr_word(int i, const LegSet& A, const Params& params) {
  if (!A.valid_for(params)) throw std::invalid_argument("irr_word: invalid leg set");
  if (i < 1 || i > params.m) throw std::invalid_argument("irr_word: position out of range");
  if (A.at(i) <= i) throw std::invalid_argument("irr_word: requires a_i > i");

  IrrWord out;
  std::vector<int> letters;
  const bool kappa_edge = params.charge_diff() == params.e - 1;

  if (kappa_edge && i == 1) {
    if (!edge_letters(A, params, letters)) return out;
    out.target = A.replaced(A.at(1), 2);
  } else {
    for (int j = 1; j < i; ++j)
      if (A.at(j) != j) throw std::invalid_argument("irr_word: requires a_j = j for j < i");
    if (!main_letters(i, A, params, letters)) return out;
    out.target = main_target(i, A);
  }

  out.word.letters = std::move(letters);
  out.word.sign = 1;
  SignedLeg got = apply_word(out.word, A, params);
  if (got.is_zero() || got.leg != out.target) {
    std::ostringstream os;
    os << "irr_word: table word " << out.word.str() << " applied to v" << A.str()
       << " gave " << (got.is_zero() ? std::string("0") : "v" + got.leg.str())
       << ", expected v" << out.target.str();
    throw std::logic_error(os.str());
  }
  out.word.sign = got.sign;  // normalize so the word evaluates to +target
  out.found = true;
  return out;
}

std::string Separator::str() const {
  if (kind == Kind::Idempotent) return "e" + residue_seq_str(iseq);
  return word.str();
}

Separator separator(const LegSet& s, const LegSet& t, const Params& params) {
  if (!s.valid_for(params) || !t.valid_for(params))
    throw std::invalid_argument("separator: invalid leg sets");
  if (s == t) throw std::invalid_argument("separator: labels must be distinct");

  Separator out;
  ResidueSeq is = residue_sequence_hook(params, s);
  ResidueSeq it = residue_sequence_hook(params, t);
  if (is != it) {
    out.kind = Separator::Kind::Idempotent;
    out.iseq = it;
    out.killed = 0;  // e(i_t) kills v_s, fixes v_t
    return out;
  }

  auto try_word = [&](const GenWord& w) -> bool {
    SignedLeg on_s = apply_word(w, s, params);
    SignedLeg on_t = apply_word(w, t, params);
    if (on_s.is_zero() == on_t.is_zero()) return false;
    out.kind = Separator::Kind::Word;
    out.word = w;
    out.killed = on_s.is_zero() ? 0 : 1;
    return true;
  };

  for (int l = 1; l < params.n; ++l)
    if (try_word(GenWord{1, {l}})) return out;
  for (int l1 = 1; l1 < params.n; ++l1)
    for (int l2 = 1; l2 < params.n; ++l2)
      if (try_word(GenWord{1, {l1, l2}})) return out;

  throw std::logic_error("separator: no separator of length <= 2 for v" + s.str() + ", v" +
                         t.str() + "; this falsifies the linear-combination proposition");
}

}  // namespace specht
