#include "mckay/spectrum.hpp"

#include <algorithm>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

TurnFraction turn_fraction(const Rational& q) {
  Rational r = q - Rational(floor_rat(q));
  if (r == 0) r = 1;
  return TurnFraction{r};
}

int EigenSpectrum::multiplicity_of(const Rational& q) const {
  for (const SpectrumEntry& e : entries)
    if (e.q.value == q) return e.mult;
  return 0;
}

Rational EigenSpectrum::weighted_angle_sum() const {
  Rational s = 0;
  for (const SpectrumEntry& e : entries) s += e.q.value * e.mult;
  return s;
}

EigenSpectrum eigen_spectrum(const MatrixGroup& group, std::size_t element_index) {
  std::int64_t r = static_cast<std::int64_t>(group.element_order(element_index));
  std::int64_t field = lcm_checked(group.field_order(), r);
  CycMatrix m = group.element(element_index).promoted(field);
  bool diagonal = m.is_diagonal();

  EigenSpectrum out;
  for (std::int64_t k = 1; k <= r; ++k) {
    Cyclotomic lambda = Cyclotomic::root_of_unity(field, k * (field / r));
    int mult = 0;
    if (diagonal) {
      for (int i = 0; i < m.dim(); ++i)
        if (m.at(i, i) == lambda) ++mult;
    } else {
      mult = shifted_nullity(m, lambda);
    }
    if (mult == 0) continue;
    out.entries.push_back(SpectrumEntry{turn_fraction(Rational(k, r)), mult});
    out.total_dim += mult;
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.q < b.q; });
  require(out.total_dim == group.dim(), ErrorKind::Internal,
          "eigenvalue multiplicities do not sum to n");
  return out;
}

int age_of(const EigenSpectrum& spectrum) {
  Rational a = 0;
  for (const SpectrumEntry& e : spectrum.entries) a += (Rational(1) - e.q.value) * e.mult;
  require(is_integer(a), ErrorKind::NonIntegerAge,
          "age " + rat_string(a) + " is not an integer; the element is not in SL");
  BigInt v = rat_num(a);
  require(v >= 0 && v < spectrum.total_dim, ErrorKind::Internal, "age out of range [0, n)");
  return static_cast<int>(v);
}

ClassSpectrum class_spectrum(const MatrixGroup& group, std::size_t class_index) {
  const ConjClass& cls = group.conjugacy_classes()[class_index];
  ClassSpectrum out;
  out.class_index = class_index;
  out.spectrum = eigen_spectrum(group, cls.rep_index);
  out.age = age_of(out.spectrum);
  out.min_q = out.spectrum.entries.front().q;
  return out;
}

std::vector<ClassSpectrum> class_spectra(const MatrixGroup& group) {
  std::vector<ClassSpectrum> out;
  out.reserve(group.conjugacy_classes().size());
  for (std::size_t c = 0; c < group.conjugacy_classes().size(); ++c)
    out.push_back(class_spectrum(group, c));
  return out;
}

std::map<int, std::uint64_t> age_census(const MatrixGroup& group) {
  std::map<int, std::uint64_t> census;
  for (std::size_t c = 0; c < group.conjugacy_classes().size(); ++c)
    census[class_spectrum(group, c).age] += 1;
  return census;
}

namespace {

// True when every basis vector of V is an h-eigenvector with one common
// eigenvalue, i.e. V lies inside a single eigenspace of h.
bool inside_single_eigenspace(const CycMatrix& h, const std::vector<CycVec>& basis,
                              Cyclotomic* eigenvalue_out = nullptr) {
  bool have_lambda = false;
  Cyclotomic lambda;
  for (const CycVec& b : basis) {
    CycVec w = h.apply(b);
    std::size_t lead = b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_zero()) {
        lead = i;
        break;
      }
    }
    Cyclotomic ratio = w[lead] / b[lead];
    if (!have_lambda) {
      lambda = ratio;
      have_lambda = true;
    } else if (!(ratio == lambda)) {
      return false;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!(w[i] == lambda * b[i])) return false;
    }
  }
  if (eigenvalue_out) *eigenvalue_out = lambda;
  return true;
}

bool is_projective_eigenvector(const CycMatrix& h, const CycVec& v) {
  CycVec w = h.apply(v);
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  }
  Cyclotomic lambda = w[lead] / v[lead];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(w[i] == lambda * v[i])) return false;
  return true;
}

CycVec normalized_direction(CycVec v) {
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  }
  Cyclotomic inv = v[lead].inverse();
  for (auto& c : v) c *= inv;
  return v;
}

bool vec_less(const CycVec& a, const CycVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// |G_v| over special directions in V: candidates are one-dimensional joint
// eigenspaces of centralizer elements restricted to V, one representative per
// centralizer orbit. The RREF kernel basis carries an identity block on the
// free columns, so V-coordinates of any w in V can be read off directly.
std::vector<std::uint64_t> attained_gv_strata(const MatrixGroup& group,
                                              const std::vector<std::size_t>& centralizer,
                                              const std::vector<CycVec>& basis,
                                              std::uint64_t generic_gv_order) {
  std::int64_t wf = group.field_order();
  for (std::size_t h : centralizer)
    wf = lcm_checked(wf, static_cast<std::int64_t>(group.element_order(h)));
  int d = static_cast<int>(basis.size());
  std::vector<CycVec> basis_w;
  for (const CycVec& b : basis) {
    CycVec bw;
    bw.reserve(b.size());
    for (const Cyclotomic& c : b) bw.push_back(c.promoted(wf));
    basis_w.push_back(std::move(bw));
  }
  std::vector<CycMatrix> centralizer_w;
  centralizer_w.reserve(centralizer.size());
  for (std::size_t h : centralizer) centralizer_w.push_back(group.element(h).promoted(wf));

  // free columns: positions where exactly one basis vector has a 1
  std::vector<std::size_t> free_cols;
  for (int j = 0; j < d; ++j) {
    for (std::size_t p = 0; p < basis_w[static_cast<std::size_t>(j)].size(); ++p) {
      if (!(basis_w[static_cast<std::size_t>(j)][p] == Cyclotomic::one(wf))) continue;
      bool exclusive = true;
      for (int k = 0; k < d && exclusive; ++k)
        if (k != j && !basis_w[static_cast<std::size_t>(k)][p].is_zero()) exclusive = false;
      if (exclusive) {
        free_cols.push_back(p);
        break;
      }
    }
  }
  require(static_cast<int>(free_cols.size()) == d, ErrorKind::Internal,
          "kernel basis without identity block");

  std::vector<CycVec> raw;
  if (d == 1) {
    raw.push_back(normalized_direction(basis_w[0]));
  } else {
    for (std::size_t hi = 0; hi < centralizer.size(); ++hi) {
      const CycMatrix& hw = centralizer_w[hi];
      CycMatrix restriction(d, wf);
      for (int j = 0; j < d; ++j) {
        CycVec img = hw.apply(basis_w[static_cast<std::size_t>(j)]);
        for (int i = 0; i < d; ++i)
          restriction.at(i, j) = img[free_cols[static_cast<std::size_t>(i)]];
      }
      bool scalar = true;
      for (int i = 0; i < d && scalar; ++i)
        for (int j = 0; j < d && scalar; ++j)
          if (!(restriction.at(i, j) == (i == j ? restriction.at(0, 0) : Cyclotomic::zero(wf))))
            scalar = false;
      if (scalar) continue;
      std::int64_t rh = static_cast<std::int64_t>(group.element_order(centralizer[hi]));
      for (std::int64_t k = 1; k <= rh; ++k) {
        Cyclotomic lam = Cyclotomic::root_of_unity(wf, k * (wf / rh));
        for (const CycVec& coords : shifted_nullspace_basis(restriction, lam)) {
          CycVec w(basis_w[0].size(), Cyclotomic::zero(wf));
          for (int i = 0; i < d; ++i) {
            if (coords[static_cast<std::size_t>(i)].is_zero()) continue;
            for (std::size_t p = 0; p < w.size(); ++p)
              w[p] += coords[static_cast<std::size_t>(i)] * basis_w[static_cast<std::size_t>(i)][p];
          }
          raw.push_back(normalized_direction(std::move(w)));
        }
      }
    }
  }
  std::sort(raw.begin(), raw.end(), vec_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // one representative per centralizer orbit
  std::vector<CycVec> representatives;
  std::set<CycVec, bool (*)(const CycVec&, const CycVec&)> seen(vec_less);
  for (const CycVec& cand : raw) {
    if (seen.count(cand)) continue;
    representatives.push_back(cand);
    for (const CycMatrix& hw : centralizer_w) seen.insert(normalized_direction(hw.apply(cand)));
  }

  std::vector<CycMatrix> all_w;
  all_w.reserve(group.size());
  for (std::size_t h = 0; h < group.size(); ++h) all_w.push_back(group.element(h).promoted(wf));
  std::vector<std::uint64_t> attained{generic_gv_order};
  for (const CycVec& v : representatives) {
    std::uint64_t count = 0;
    for (const CycMatrix& hw : all_w)
      if (is_projective_eigenvector(hw, v)) ++count;
    attained.push_back(count);
  }
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  return attained;
}

}  // namespace

IsotropyData isotropy(const MatrixGroup& group, std::size_t class_index, const Rational& q,
                      bool with_strata) {
  const ConjClass& cls = group.conjugacy_classes()[class_index];
  std::size_t rep = cls.rep_index;
  std::int64_t r = static_cast<std::int64_t>(group.element_order(rep));
  std::int64_t field = lcm_checked(group.field_order(), r);

  Rational qq = turn_fraction(q).value;
  BigInt a = rat_num(qq), b = rat_den(qq);
  require(b <= r && r % to_int64(b) == 0, ErrorKind::NotAnEigenvalue,
          rat_string(qq) + " is not an eigenvalue turn fraction of the class representative");
  CycMatrix m = group.element(rep).promoted(field);
  Cyclotomic lambda = Cyclotomic::root_of_unity(field, to_int64(a) * (field / to_int64(b)));
  std::vector<CycVec> basis = shifted_nullspace_basis(m, lambda);
  require(!basis.empty(), ErrorKind::NotAnEigenvalue,
          rat_string(qq) + " is not an eigenvalue of the class representative");

  std::vector<std::size_t> centralizer;
  std::vector<std::size_t> rep_row = group.left_multiplication_row(rep);
  for (std::size_t h = 0; h < group.size(); ++h)
    if (group.product(h, rep) == rep_row[h]) centralizer.push_back(h);
  require(centralizer.size() == cls.centralizer_order, ErrorKind::Internal,
          "centralizer scan disagrees with the class table");

  IsotropyData out;
  out.class_index = class_index;
  out.q = TurnFraction{qq};

  // Generic isotropy: h fixes a generic direction of V iff V sits inside a
  // single eigenspace of h.
  std::vector<std::size_t> gv_members;
  std::vector<Cyclotomic> gv_eigenvalues;
  for (std::size_t h : centralizer) {
    Cyclotomic lam;
    CycMatrix hm = group.element(h).promoted(field);
    if (inside_single_eigenspace(hm, basis, &lam)) {
      gv_members.push_back(h);
      gv_eigenvalues.push_back(lam);
    }
  }
  out.generic_gv_order = gv_members.size();
  require(cls.centralizer_order % out.generic_gv_order == 0, ErrorKind::Internal,
          "|G_v| does not divide the centralizer order");
  out.fiber_size = cls.centralizer_order / out.generic_gv_order;

  Rational mult = qq * Rational(out.generic_gv_order);
  require(is_integer(mult) && mult >= 1, ErrorKind::Internal,
          "orbit multiplicity q*|G_v| = " + rat_string(mult) + " is not a positive integer");
  out.orbit_multiplicity = static_cast<std::uint64_t>(to_int64(rat_num(mult)));

  // Cross-check: G_v is cyclic and g = h^m for its generator h, the member
  // acting on V by the primitive |G_v|-th root of unity.
  {
    std::int64_t gv = static_cast<std::int64_t>(out.generic_gv_order);
    std::int64_t joined = lcm_checked(field, gv);
    Cyclotomic primitive = Cyclotomic::root_of_unity(joined, joined / gv);
    std::size_t generator = group.size();
    for (std::size_t i = 0; i < gv_members.size(); ++i) {
      if (gv_eigenvalues[i] == primitive) {
        generator = gv_members[i];
        break;
      }
    }
    require(generator != group.size(), ErrorKind::Internal,
            "no generator of G_v acts by the primitive root");
    std::size_t acc = 0;
    for (std::uint64_t k = 0; k < out.orbit_multiplicity; ++k) acc = group.product(acc, generator);
    require(acc == rep, ErrorKind::Internal, "g != h^m for the G_v generator h");
  }

  if (with_strata && group.dim() <= 3)
    out.attained_gv_orders = attained_gv_strata(group, centralizer, basis, out.generic_gv_order);

  return out;
}

}  // namespace mckay
