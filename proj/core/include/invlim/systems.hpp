#pragma once

#include <set>
#include <vector>

#include "invlim/hull.hpp"

namespace invlim {

/* Product-like stage modules are represented flat: every coordinate of an
   N-copy becomes its own family, "n.<fam>.<j>", whose copy index ranges
   over the index set of the system. flatten_copies builds that shape;
   copy_at / set_copy translate between the flat form and one N-copy. */
ModuleShape flatten_copies(const ModuleShape& n_shape, const std::string& prefix,
                           Extent extent);
Element copy_at(const Element& x, const ModuleShape& n_shape,
                std::size_t first_family, std::int64_t index);
void set_copy(Element& x, std::size_t first_family, std::int64_t index,
              const Element& n_elem);

/* ---- the P_D system ----
   Index set I = omega with distinguished index 0. Slot 0 holds M, every
   index >= 1 holds a copy of N; elements have finite support. */
class SubmodSystem {
 public:
  explicit SubmodSystem(InjectivePresentation pres);

  const InjectivePresentation& presentation() const { return pres_; }
  const ModuleShape& p_shape() const { return p_shape_; }

  /* component at index 0 (an M-element) */
  Element m_component(const Element& x) const;
  /* component at index i >= 1 (an N-element) */
  Element n_component(const Element& x, std::int64_t i) const;
  /* indices i >= 1 whose N-component is nonzero */
  std::set<std::int64_t> n_support(const Element& x) const;

  Element make_element(
      const Element& m_part,
      const std::vector<std::pair<std::int64_t, Element>>& n_parts) const;

  /* shape match + no N-coordinate stored at the reserved index 0 */
  void validate(const Element& x) const;

 private:
  InjectivePresentation pres_;
  ModuleShape p_shape_;
  std::size_t m_family_count_;
};

/* finite D subset of I - {0} */
struct FiniteSubsetD {
  std::set<std::int64_t> indices;

  explicit FiniteSubsetD(std::set<std::int64_t> idx);
};

/* x in P_D iff x_i = f(x_0) for every i in D */
bool pD_contains(const SubmodSystem& sys, const FiniteSubsetD& d,
                 const Element& x);

/* Membership in the intersection of all P_D: finite support forces
   f(x_0) = 0, so the test is "no N-support and x_0 in ker f". The witness
   is the kernel witness of x_0. */
std::optional<KernelWitness> intersection_member(const SubmodSystem& sys,
                                                 const Element& x);

/* the isomorphism P_D -> product over I-D: drop clears the D-coordinates
   (they are determined), reinsert recomputes them as f(x_0) */
Element pD_drop(const SubmodSystem& sys, const FiniteSubsetD& d,
                const Element& x);
Element pD_reinsert(const SubmodSystem& sys, const FiniteSubsetD& d,
                    const Element& x);

/* ---- finite chains of surjections ---- */
class SetChain {
 public:
  /* sizes[k] = |S_k|; maps[k] : S_{k+1} -> S_k given as value vectors,
     each validated surjective */
  SetChain(std::vector<std::int64_t> sizes,
           std::vector<std::vector<std::int64_t>> maps);

  std::size_t stage_count() const { return sizes_.size(); }
  std::int64_t size(std::size_t k) const { return sizes_.at(k); }
  const std::vector<std::int64_t>& map(std::size_t k) const {
    return maps_.at(k);
  }
  /* composed surjection S_l -> S_k for k <= l */
  std::vector<std::int64_t> composed_map(std::size_t k, std::size_t l) const;

 private:
  std::vector<std::int64_t> sizes_;
  std::vector<std::vector<std::int64_t>> maps_;
};

/* stage module of the fiber-sum system: one N-copy per set element */
ModuleShape fiber_stage_shape(const ModuleShape& n_shape,
                              std::int64_t set_size);

/* the Hom (+)_{S_{k+1}} N -> (+)_{S_k} N collapsing each fiber to its sum */
Hom fiber_sum_map(const SetChain& chain, std::size_t k,
                  const ModuleShape& n_shape);

/* a compatible family over stages 0..stage_count-1 */
class ThreadPrefix {
 public:
  ThreadPrefix(SetChain chain, ModuleShape n_shape,
               std::vector<Element> stage_elements);
  /* build by pushing a top-stage element down the whole chain */
  static ThreadPrefix from_top(const SetChain& chain,
                               const ModuleShape& n_shape, const Element& top);

  const SetChain& chain() const { return chain_; }
  const ModuleShape& n_shape() const { return n_shape_; }
  const std::vector<Element>& stage_elements() const { return elements_; }

 private:
  SetChain chain_;
  ModuleShape n_shape_;
  std::vector<Element> elements_;
};

/* Support sizes are weakly increasing up the chain; whenever two stages
   tie, the composed set map must restrict to a bijection between the
   supports. Both facts are checked, not assumed. */
struct ThreadSupportReport {
  std::vector<std::vector<std::int64_t>> supports;  // sorted, per stage
  bool monotone = true;
  struct TiedPair {
    std::size_t k, l;  // k < l, |T_k| = |T_l|
    bool bijection;
  };
  std::vector<TiedPair> tied_pairs;

  bool all_bijections() const;
};

ThreadSupportReport thread_support_analysis(const ThreadPrefix& thread);

/* ---- fully surjective stages ---- */
/* shape = M (+) (+)_{S} N with |S| copies; constraint:
   sum of the N-components equals f(x_0) */
class OntoStage {
 public:
  OntoStage(InjectivePresentation pres, std::int64_t set_size,
            std::int64_t base_index);

  const InjectivePresentation& presentation() const { return pres_; }
  const ModuleShape& shape() const { return shape_; }
  std::int64_t set_size() const { return set_size_; }
  std::int64_t base_index() const { return base_index_; }

  Element m_component(const Element& x) const;
  Element n_component(const Element& x, std::int64_t i) const;
  Element n_total(const Element& x) const;  // sum of all N-components
  Element make_element(
      const Element& m_part,
      const std::vector<std::pair<std::int64_t, Element>>& n_parts) const;

 private:
  InjectivePresentation pres_;
  std::int64_t set_size_;
  std::int64_t base_index_;
  ModuleShape shape_;
};

bool onto_stage_contains(const OntoStage& stage, const Element& x);

/* isomorphism P ~ M (+) (+)_{S-{i0}} N: the base coordinate is determined
   by the others; drop clears it, reinsert solves for it */
Element onto_stage_drop(const OntoStage& stage, const Element& x);
Element onto_stage_reinsert(const OntoStage& stage, const Element& x);

/* identity on M, fiber sum on the N block; maps the finer stage's
   constraint set onto the coarser one's */
Hom onto_connecting_map(const OntoStage& fine, const OntoStage& coarse,
                        const std::vector<std::int64_t>& set_map);

/* ---- eventually-integer sequence limit ---- */
/* Rational sequences that are eventually a constant integer. The head
   stores the exceptional prefix; everything beyond equals `tail`.
   Canonical form trims head entries equal to the tail, so equality of
   represented sequences is structural equality. */
class EventuallyIntegerSeq {
 public:
  EventuallyIntegerSeq() : tail_(0) {}
  EventuallyIntegerSeq(std::vector<Rational> head, Integer tail);

  const std::vector<Rational>& head() const { return head_; }
  const Integer& tail() const { return tail_; }
  Rational at(std::size_t i) const {
    return i < head_.size() ? head_[i] : Rational(tail_);
  }
  bool is_zero() const { return head_.empty() && tail_ == 0; }

  bool operator==(const EventuallyIntegerSeq& o) const = default;

 private:
  std::vector<Rational> head_;
  Integer tail_;
};

EventuallyIntegerSeq seq_add(const EventuallyIntegerSeq& a,
                             const EventuallyIntegerSeq& b);
EventuallyIntegerSeq seq_scalar_mul(const Integer& n,
                                    const EventuallyIntegerSeq& a);

/* stage module M_n = Q^n (+) (+)_{i >= n} Q/Z; family "q" holds the n
   rational slots, family "t" the Q/Z slots (only indices >= n are used) */
ModuleShape limit_seq_stage_shape(std::int64_t n);

/* coordinates below n stay rational, the rest reduce mod 1 */
Element limit_seq_stage_project(const EventuallyIntegerSeq& seq, std::int64_t n);

/* connecting map M_n -> M_m for m <= n: copy below m, reduce the middle
   band, copy the Q/Z tail */
Element limit_seq_connect(const Element& x, std::int64_t from_n, std::int64_t to_n);

/* Division in the limit: k divides the sequence iff k divides the tail
   (head entries divide freely in Q). On failure the tail itself is the
   refutation: infinitely many coordinates equal it. */
struct SeqDivision {
  std::optional<EventuallyIntegerSeq> quotient;
  std::optional<Integer> blocked_tail;
};
SeqDivision limit_seq_divisibility(const EventuallyIntegerSeq& seq, const Integer& k);

/* a tail-0 (hence divisible-part) sequence projecting to x at stage n */
EventuallyIntegerSeq limit_seq_divisible_preimage(const Element& x, std::int64_t n);

}  // namespace invlim
