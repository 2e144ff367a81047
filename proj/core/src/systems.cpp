#include "invlim/systems.hpp"

#include <algorithm>

namespace invlim {

ModuleShape flatten_copies(const ModuleShape& n_shape, const std::string& prefix,
                           Extent extent) {
  if (!n_shape.all_finite_extent())
    throw shape_error("flatten_copies needs finite inner extents");
  std::vector<Family> families;
  for (const Family& f : n_shape.families())
    for (std::int64_t j = 0; j < f.extent.n; ++j)
      families.push_back(Family{
          prefix + f.id + "." + std::to_string(j), f.atom, extent});
  return ModuleShape(std::move(families));
}

Element copy_at(const Element& x, const ModuleShape& n_shape,
                std::size_t first_family, std::int64_t index) {
  Element out(n_shape);
  std::size_t flat = first_family;
  for (std::size_t g = 0; g < n_shape.family_count(); ++g)
    for (std::int64_t j = 0; j < n_shape.family(g).extent.n; ++j, ++flat) {
      AtomElement v = x.get(flat, index);
      if (!v.is_zero()) out.set(g, j, v);
    }
  return out;
}

void set_copy(Element& x, std::size_t first_family, std::int64_t index,
              const Element& n_elem) {
  const ModuleShape& n_shape = n_elem.shape();
  std::size_t flat = first_family;
  for (std::size_t g = 0; g < n_shape.family_count(); ++g)
    for (std::int64_t j = 0; j < n_shape.family(g).extent.n; ++j, ++flat)
      x.set(flat, index, n_elem.get(g, j));
}

/* ---- SubmodSystem ---- */

SubmodSystem::SubmodSystem(InjectivePresentation pres) : pres_(std::move(pres)) {
  std::vector<Family> families;
  for (const Family& f : pres_.m_shape.families())
    families.push_back(Family{"m." + f.id, f.atom, f.extent});
  m_family_count_ = families.size();
  ModuleShape n_flat = flatten_copies(pres_.n_shape, "n.", Extent::omega());
  for (const Family& f : n_flat.families()) families.push_back(f);
  p_shape_ = ModuleShape(std::move(families));
}

void SubmodSystem::validate(const Element& x) const {
  if (!(x.shape() == p_shape_))
    throw shape_error("element does not live in the P-system shape");
  for (const auto& [c, v] : x.coords())
    if (c.family >= m_family_count_ && c.index == 0)
      throw value_error("index 0 is reserved for the M component");
}

Element SubmodSystem::m_component(const Element& x) const {
  Element out(pres_.m_shape);
  for (const auto& [c, v] : x.coords())
    if (c.family < m_family_count_) out.set(c.family, c.index, v);
  return out;
}

Element SubmodSystem::n_component(const Element& x, std::int64_t i) const {
  if (i < 1) throw value_error("N components live at indices >= 1");
  return copy_at(x, pres_.n_shape, m_family_count_, i);
}

std::set<std::int64_t> SubmodSystem::n_support(const Element& x) const {
  std::set<std::int64_t> out;
  for (const auto& [c, v] : x.coords())
    if (c.family >= m_family_count_) out.insert(c.index);
  return out;
}

Element SubmodSystem::make_element(
    const Element& m_part,
    const std::vector<std::pair<std::int64_t, Element>>& n_parts) const {
  if (!(m_part.shape() == pres_.m_shape))
    throw shape_error("make_element: M part has the wrong shape");
  Element out(p_shape_);
  for (const auto& [c, v] : m_part.coords()) out.set(c.family, c.index, v);
  for (const auto& [i, n_elem] : n_parts) {
    if (i < 1) throw value_error("N components live at indices >= 1");
    if (!(n_elem.shape() == pres_.n_shape))
      throw shape_error("make_element: N part has the wrong shape");
    set_copy(out, m_family_count_, i, n_elem);
  }
  return out;
}

FiniteSubsetD::FiniteSubsetD(std::set<std::int64_t> idx)
    : indices(std::move(idx)) {
  if (!indices.empty() && *indices.begin() < 1)
    throw value_error("D must consist of indices >= 1");
}

bool pD_contains(const SubmodSystem& sys, const FiniteSubsetD& d,
                 const Element& x) {
  sys.validate(x);
  if (d.indices.empty()) return true;
  Element fx0 = hom_apply(sys.presentation().f, sys.m_component(x));
  for (std::int64_t i : d.indices)
    if (!(sys.n_component(x, i) == fx0)) return false;
  return true;
}

std::optional<KernelWitness> intersection_member(const SubmodSystem& sys,
                                                 const Element& x) {
  sys.validate(x);
  if (!sys.n_support(x).empty()) return std::nullopt;
  return kernel_membership(sys.presentation(), sys.m_component(x));
}

Element pD_drop(const SubmodSystem& sys, const FiniteSubsetD& d,
                const Element& x) {
  if (!pD_contains(sys, d, x))
    throw value_error("pD_drop: element is not in P_D");
  Element out = x;
  Element zero_n(sys.presentation().n_shape);
  for (std::int64_t i : d.indices)
    set_copy(out, sys.presentation().m_shape.family_count(), i, zero_n);
  return out;
}

Element pD_reinsert(const SubmodSystem& sys, const FiniteSubsetD& d,
                    const Element& x) {
  sys.validate(x);
  std::set<std::int64_t> support = sys.n_support(x);
  for (std::int64_t i : d.indices)
    if (support.count(i))
      throw value_error("pD_reinsert: element already supported on D");
  Element out = x;
  Element fx0 = hom_apply(sys.presentation().f, sys.m_component(x));
  for (std::int64_t i : d.indices)
    set_copy(out, sys.presentation().m_shape.family_count(), i, fx0);
  return out;
}

/* ---- SetChain ---- */

SetChain::SetChain(std::vector<std::int64_t> sizes,
                   std::vector<std::vector<std::int64_t>> maps)
    : sizes_(std::move(sizes)), maps_(std::move(maps)) {
  if (sizes_.empty()) throw value_error("set chain needs at least one stage");
  for (std::int64_t s : sizes_)
    if (s < 1) throw value_error("set chain stages must be nonempty");
  if (maps_.size() + 1 != sizes_.size())
    throw value_error("set chain needs one map per adjacent stage pair");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& f = maps_[k];
    if (static_cast<std::int64_t>(f.size()) != sizes_[k + 1])
      throw value_error("set chain map " + std::to_string(k) +
                        " has the wrong domain size");
    std::vector<bool> hit(static_cast<std::size_t>(sizes_[k]), false);
    for (std::int64_t v : f) {
      if (v < 0 || v >= sizes_[k])
        throw value_error("set chain map value out of range");
      hit[static_cast<std::size_t>(v)] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw value_error("set chain map " + std::to_string(k) +
                        " is not surjective");
  }
}

std::vector<std::int64_t> SetChain::composed_map(std::size_t k,
                                                 std::size_t l) const {
  if (k > l || l >= stage_count())
    throw value_error("composed_map needs k <= l < stage count");
  std::vector<std::int64_t> out(static_cast<std::size_t>(sizes_[l]));
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = static_cast<std::int64_t>(j);
  for (std::size_t s = l; s > k; --s)
    for (auto& v : out) v = maps_[s - 1][static_cast<std::size_t>(v)];
  return out;
}

ModuleShape fiber_stage_shape(const ModuleShape& n_shape,
                              std::int64_t set_size) {
  return flatten_copies(n_shape, "n.", Extent::finite(set_size));
}

Hom fiber_sum_map(const SetChain& chain, std::size_t k,
                  const ModuleShape& n_shape) {
  if (k + 1 >= chain.stage_count())
    throw value_error("fiber_sum_map: stage out of range");
  return hom_fiber_sum(fiber_stage_shape(n_shape, chain.size(k + 1)),
                       fiber_stage_shape(n_shape, chain.size(k)),
                       chain.map(k));
}

/* ---- ThreadPrefix ---- */

ThreadPrefix::ThreadPrefix(SetChain chain, ModuleShape n_shape,
                           std::vector<Element> stage_elements)
    : chain_(std::move(chain)),
      n_shape_(std::move(n_shape)),
      elements_(std::move(stage_elements)) {
  if (elements_.size() != chain_.stage_count())
    throw value_error("thread needs one element per stage");
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (!(elements_[k].shape() == fiber_stage_shape(n_shape_, chain_.size(k))))
      throw shape_error("thread element " + std::to_string(k) +
                        " has the wrong stage shape");
  for (std::size_t k = 0; k + 1 < elements_.size(); ++k) {
    Hom phi = fiber_sum_map(chain_, k, n_shape_);
    if (!(hom_apply(phi, elements_[k + 1]) == elements_[k]))
      throw value_error("invalid thread: stage " + std::to_string(k + 1) +
                        " does not map onto stage " + std::to_string(k));
  }
}

ThreadPrefix ThreadPrefix::from_top(const SetChain& chain,
                                    const ModuleShape& n_shape,
                                    const Element& top) {
  std::vector<Element> elems(chain.stage_count(), Element());
  elems.back() = top;
  for (std::size_t k = chain.stage_count() - 1; k > 0; --k)
    elems[k - 1] = hom_apply(fiber_sum_map(chain, k - 1, n_shape), elems[k]);
  return ThreadPrefix(chain, n_shape, std::move(elems));
}

bool ThreadSupportReport::all_bijections() const {
  return std::all_of(tied_pairs.begin(), tied_pairs.end(),
                     [](const TiedPair& t) { return t.bijection; });
}

ThreadSupportReport thread_support_analysis(const ThreadPrefix& thread) {
  const SetChain& chain = thread.chain();
  const ModuleShape& n_shape = thread.n_shape();
  ThreadSupportReport report;

  for (std::size_t k = 0; k < chain.stage_count(); ++k) {
    std::set<std::int64_t> support;
    const Element& x = thread.stage_elements()[k];
    for (std::int64_t i = 0; i < chain.size(k); ++i)
      if (!copy_at(x, n_shape, 0, i).is_zero()) support.insert(i);
    report.supports.emplace_back(support.begin(), support.end());
  }
  for (std::size_t k = 0; k + 1 < report.supports.size(); ++k)
    if (report.supports[k].size() > report.supports[k + 1].size())
      report.monotone = false;

  for (std::size_t k = 0; k < report.supports.size(); ++k)
    for (std::size_t l = k + 1; l < report.supports.size(); ++l) {
      if (report.supports[k].size() != report.supports[l].size()) continue;
      std::vector<std::int64_t> f = chain.composed_map(k, l);
      /* the composed map must send T_l bijectively onto T_k */
      std::set<std::int64_t> image;
      bool ok = true;
      for (std::int64_t j : report.supports[l]) {
        std::int64_t i = f[static_cast<std::size_t>(j)];
        if (!std::binary_search(report.supports[k].begin(),
                                report.supports[k].end(), i) ||
            !image.insert(i).second) {
          ok = false;
          break;
        }
      }
      ok = ok && image.size() == report.supports[k].size();
      report.tied_pairs.push_back(
          ThreadSupportReport::TiedPair{k, l, ok});
    }
  return report;
}

/* ---- OntoStage ---- */

OntoStage::OntoStage(InjectivePresentation pres, std::int64_t set_size,
                     std::int64_t base_index)
    : pres_(std::move(pres)), set_size_(set_size), base_index_(base_index) {
  if (set_size_ < 1) throw value_error("onto stage needs a nonempty set");
  if (base_index_ < 0 || base_index_ >= set_size_)
    throw value_error("base index outside the stage set");
  std::vector<Family> families;
  for (const Family& f : pres_.m_shape.families())
    families.push_back(Family{"m." + f.id, f.atom, f.extent});
  ModuleShape n_flat = flatten_copies(pres_.n_shape, "n.",
                                      Extent::finite(set_size_));
  for (const Family& f : n_flat.families()) families.push_back(f);
  shape_ = ModuleShape(std::move(families));
}

Element OntoStage::m_component(const Element& x) const {
  Element out(pres_.m_shape);
  const std::size_t mc = pres_.m_shape.family_count();
  for (const auto& [c, v] : x.coords())
    if (c.family < mc) out.set(c.family, c.index, v);
  return out;
}

Element OntoStage::n_component(const Element& x, std::int64_t i) const {
  if (i < 0 || i >= set_size_)
    throw value_error("stage index outside the set");
  return copy_at(x, pres_.n_shape, pres_.m_shape.family_count(), i);
}

Element OntoStage::n_total(const Element& x) const {
  Element total(pres_.n_shape);
  for (std::int64_t i = 0; i < set_size_; ++i)
    total = elem_add(total, n_component(x, i));
  return total;
}

Element OntoStage::make_element(
    const Element& m_part,
    const std::vector<std::pair<std::int64_t, Element>>& n_parts) const {
  if (!(m_part.shape() == pres_.m_shape))
    throw shape_error("make_element: M part has the wrong shape");
  Element out(shape_);
  for (const auto& [c, v] : m_part.coords()) out.set(c.family, c.index, v);
  for (const auto& [i, n_elem] : n_parts) {
    if (!(n_elem.shape() == pres_.n_shape))
      throw shape_error("make_element: N part has the wrong shape");
    if (i < 0 || i >= set_size_)
      throw value_error("stage index outside the set");
    set_copy(out, pres_.m_shape.family_count(), i, n_elem);
  }
  return out;
}

bool onto_stage_contains(const OntoStage& stage, const Element& x) {
  if (!(x.shape() == stage.shape()))
    throw shape_error("element does not live in the stage shape");
  Element fx0 = hom_apply(stage.presentation().f, stage.m_component(x));
  return stage.n_total(x) == fx0;
}

Element onto_stage_drop(const OntoStage& stage, const Element& x) {
  if (!onto_stage_contains(stage, x))
    throw value_error("onto_stage_drop: constraint (sum = f(x_0)) violated");
  Element out = x;
  set_copy(out, stage.presentation().m_shape.family_count(),
           stage.base_index(), Element(stage.presentation().n_shape));
  return out;
}

Element onto_stage_reinsert(const OntoStage& stage, const Element& x) {
  if (!(x.shape() == stage.shape()))
    throw shape_error("element does not live in the stage shape");
  if (!stage.n_component(x, stage.base_index()).is_zero())
    throw value_error("onto_stage_reinsert: base coordinate already set");
  Element fx0 = hom_apply(stage.presentation().f, stage.m_component(x));
  Element rest = stage.n_total(x);
  Element out = x;
  set_copy(out, stage.presentation().m_shape.family_count(),
           stage.base_index(), elem_sub(fx0, rest));
  return out;
}

Hom onto_connecting_map(const OntoStage& fine, const OntoStage& coarse,
                        const std::vector<std::int64_t>& set_map) {
  if (!(fine.presentation().m_shape == coarse.presentation().m_shape) ||
      !(fine.presentation().n_shape == coarse.presentation().n_shape))
    throw shape_error("onto_connecting_map: stages over different "
                      "presentations");
  std::vector<Family> m_fams(
      fine.shape().families().begin(),
      fine.shape().families().begin() +
          static_cast<std::ptrdiff_t>(
              fine.presentation().m_shape.family_count()));
  ModuleShape m_part(m_fams);
  Hom n_hom = hom_fiber_sum(
      fiber_stage_shape(fine.presentation().n_shape, fine.set_size()),
      fiber_stage_shape(coarse.presentation().n_shape, coarse.set_size()),
      set_map);
  return hom_direct_sum({hom_identity(m_part), n_hom});
}

/* ---- eventually-integer sequence limit ---- */

EventuallyIntegerSeq::EventuallyIntegerSeq(std::vector<Rational> head,
                                           Integer tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  while (!head_.empty() && head_.back() == Rational(tail_)) head_.pop_back();
}

EventuallyIntegerSeq seq_add(const EventuallyIntegerSeq& a,
                             const EventuallyIntegerSeq& b) {
  std::vector<Rational> head(std::max(a.head().size(), b.head().size()));
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = a.at(i) + b.at(i);
  return EventuallyIntegerSeq(std::move(head), a.tail() + b.tail());
}

EventuallyIntegerSeq seq_scalar_mul(const Integer& n,
                                    const EventuallyIntegerSeq& a) {
  std::vector<Rational> head(a.head().size());
  for (std::size_t i = 0; i < head.size(); ++i)
    head[i] = Rational(n) * a.at(i);
  return EventuallyIntegerSeq(std::move(head), n * a.tail());
}

ModuleShape limit_seq_stage_shape(std::int64_t n) {
  if (n < 0) throw value_error("stage index must be >= 0");
  std::vector<Family> families;
  if (n > 0)
    families.push_back(Family{"q", Atom::rationals(), Extent::finite(n)});
  families.push_back(Family{"t", Atom::rationals_mod_one(), Extent::omega()});
  return ModuleShape(std::move(families));
}

namespace {

/* positions of the "q" and "t" families in a sequence-limit stage shape */
struct SeqStageLayout {
  std::optional<std::size_t> q;
  std::size_t t;
};

SeqStageLayout seq_stage_layout(const ModuleShape& shape) {
  SeqStageLayout out{shape.find("q"), 0};
  auto t = shape.find("t");
  if (!t) throw shape_error("not a sequence-limit stage shape (no 't' family)");
  out.t = *t;
  return out;
}

/* the Q/Z slots of stage n start at index n; anything lower is malformed */
void seq_stage_validate(const Element& x, std::int64_t n) {
  if (!(x.shape() == limit_seq_stage_shape(n)))
    throw shape_error("element does not live in the given stage");
  SeqStageLayout lay = seq_stage_layout(x.shape());
  for (const auto& [c, v] : x.coords())
    if (c.family == lay.t && c.index < n)
      throw value_error("Q/Z coordinate below the stage index");
}

}  // namespace

Element limit_seq_stage_project(const EventuallyIntegerSeq& seq, std::int64_t n) {
  ModuleShape shape = limit_seq_stage_shape(n);
  SeqStageLayout lay = seq_stage_layout(shape);
  Element out(shape);
  for (std::int64_t i = 0; i < n; ++i)
    out.set(*lay.q, i, AtomElement(Atom::rationals(),
                                   seq.at(static_cast<std::size_t>(i))));
  const std::int64_t stop =
      std::max<std::int64_t>(n, static_cast<std::int64_t>(seq.head().size()));
  for (std::int64_t i = n; i < stop; ++i)
    out.set(lay.t, i, AtomElement(Atom::rationals_mod_one(),
                                  seq.at(static_cast<std::size_t>(i))));
  return out;  // beyond the head the value is the integer tail: reduces to 0
}

Element limit_seq_connect(const Element& x, std::int64_t from_n, std::int64_t to_n) {
  if (to_n > from_n)
    throw value_error("limit_seq_connect maps finer stages to coarser ones");
  seq_stage_validate(x, from_n);
  ModuleShape target = limit_seq_stage_shape(to_n);
  SeqStageLayout src = seq_stage_layout(x.shape());
  SeqStageLayout dst = seq_stage_layout(target);
  Element out(target);
  for (const auto& [c, v] : x.coords()) {
    if (src.q && c.family == *src.q) {
      if (c.index < to_n)
        out.set(*dst.q, c.index, v);
      else
        out.set(dst.t, c.index, reduce_q_to_qmodz(v));
    } else {
      out.set(dst.t, c.index, v);
    }
  }
  return out;
}

SeqDivision limit_seq_divisibility(const EventuallyIntegerSeq& seq, const Integer& k) {
  if (k < 1) throw value_error("limit_seq_divisibility needs k >= 1");
  if (!mpz_divisible_p(seq.tail().get_mpz_t(), k.get_mpz_t()))
    return SeqDivision{std::nullopt, seq.tail()};
  std::vector<Rational> head(seq.head().size());
  for (std::size_t i = 0; i < head.size(); ++i)
    head[i] = seq.at(i) / Rational(k);
  Integer tail;
  mpz_divexact(tail.get_mpz_t(), seq.tail().get_mpz_t(), k.get_mpz_t());
  return SeqDivision{EventuallyIntegerSeq(std::move(head), tail), std::nullopt};
}

EventuallyIntegerSeq limit_seq_divisible_preimage(const Element& x, std::int64_t n) {
  seq_stage_validate(x, n);
  std::int64_t top = n;
  for (const auto& [c, v] : x.coords())
    top = std::max(top, c.index + 1);
  std::vector<Rational> head(static_cast<std::size_t>(top));
  for (const auto& [c, v] : x.coords())
    head[static_cast<std::size_t>(c.index)] = v.value();
  /* Q/Z coordinates were stored canonically in [0,1): already lifted */
  return EventuallyIntegerSeq(std::move(head), 0);
}

}  // namespace invlim
