#include "m3k/analysis.hpp"

#include "m3k/iso.hpp"

namespace m3k {

EntryAnalysis::EntryAnalysis(const Matroid& m) : m_(m) {
  three_conn_ = is_n_connected(m_, 3);
}

bool EntryAnalysis::has_4fan() {
  if (has4fan_ < 0) has4fan_ = has_4_element_fan(m_) ? 1 : 0;
  return has4fan_ == 1;
}

bool EntryAnalysis::path_width_three() {
  if (pw3_ < 0) pw3_ = has_path_width_three(m_) ? 1 : 0;
  return pw3_ == 1;
}

void EntryAnalysis::build_derived() {
  if (derived_built_) return;
  derived_built_ = true;
  derived_.resize(m_.size());
  for (int e = 0; e < m_.size(); ++e) {
    Derived& d = derived_[e];
    d.con = minor(m_, bit(e), 0).first;
    d.del = minor(m_, 0, bit(e)).first;
    d.si = simplify(d.con).first;
    d.co = cosimplify(d.del).first;
    d.si3c = is_n_connected(d.si, 3);
    d.co3c = is_n_connected(d.co, 3);
    d.con2c = is_n_connected(d.con, 2);
    d.del2c = is_n_connected(d.del, 2);
    if (d.si3c) si3c_ |= bit(e);
    if (d.co3c) co3c_ |= bit(e);
  }
}

const std::vector<EntryAnalysis::Derived>& EntryAnalysis::derived() {
  build_derived();
  return derived_;
}

Mask EntryAnalysis::si3c_mask() {
  build_derived();
  return si3c_;
}

Mask EntryAnalysis::co3c_mask() {
  build_derived();
  return co3c_;
}

Mask EntryAnalysis::elastic_mask() {
  build_derived();
  return si3c_ & co3c_;
}

void EntryAnalysis::build_classes() {
  if (classes_built_) return;
  classes_built_ = true;
  classes_ = minor_classes(m_);
}

const MinorClassSet& EntryAnalysis::classes() {
  build_classes();
  return classes_;
}

const std::vector<std::vector<MinorWitness>>& EntryAnalysis::witnesses() {
  if (!witnesses_built_) {
    witnesses_built_ = true;
    build_classes();
    witnesses_ = witnesses_by_class(m_, classes_);
  }
  return witnesses_;
}

void EntryAnalysis::build_membership() {
  if (membership_built_) return;
  membership_built_ = true;
  build_classes();
  build_derived();
  const std::size_t k = classes_.classes.size();
  cls_si_.assign(k, 0);
  cls_co_.assign(k, 0);
  cls_con_.assign(k, 0);
  cls_del_.assign(k, 0);
  for (int e = 0; e < m_.size(); ++e) {
    const MinorClassSet si_set = minor_classes(derived_[e].si);
    const MinorClassSet co_set = minor_classes(derived_[e].co);
    const MinorClassSet con_set = minor_classes(derived_[e].con);
    const MinorClassSet del_set = minor_classes(derived_[e].del);
    for (std::size_t j = 0; j < k; ++j) {
      const Matroid& rep = classes_.classes[j].rep;
      if (si_set.contains(rep)) cls_si_[j] |= bit(e);
      if (co_set.contains(rep)) cls_co_[j] |= bit(e);
      if (con_set.contains(rep)) cls_con_[j] |= bit(e);
      if (del_set.contains(rep)) cls_del_[j] |= bit(e);
    }
  }
}

Mask EntryAnalysis::cls_si(int j) {
  build_membership();
  return cls_si_[j];
}
Mask EntryAnalysis::cls_co(int j) {
  build_membership();
  return cls_co_[j];
}
Mask EntryAnalysis::cls_con(int j) {
  build_membership();
  return cls_con_[j];
}
Mask EntryAnalysis::cls_del(int j) {
  build_membership();
  return cls_del_[j];
}

Mask EntryAnalysis::n_elastic_mask(int j) {
  return elastic_mask() & cls_si(j) & cls_co(j);
}

Mask EntryAnalysis::n_revealing_mask(int j) {
  build_membership();
  build_derived();
  return (cls_si_[j] & ~si3c_) | (cls_co_[j] & ~co3c_);
}

const std::vector<VerticalSep3>& EntryAnalysis::vseps() {
  if (!vseps_built_) {
    vseps_built_ = true;
    vseps_ = vertical_3_separations(m_);
    cseps_ = cyclic_3_separations(m_);
  }
  return vseps_;
}

const std::vector<VerticalSep3>& EntryAnalysis::cseps() {
  vseps();
  return cseps_;
}

bool EntryAnalysis::vsep_maximal(const VerticalSep3& s) {
  vseps();
  const auto& list = s.kind == SepKind::vertical ? vseps_ : cseps_;
  const Mask target = s.side_with_center();
  for (const VerticalSep3& t : list)
    for (const Mask side : {t.y | bit(t.e), t.x | bit(t.e)})
      if (side != target && (target & side) == target) return false;
  return true;
}

const std::vector<ThetaSeparator>& EntryAnalysis::separators() {
  if (!seps_built_) {
    seps_built_ = true;
    seps_ = theta_separators(m_);
  }
  return seps_;
}

bool EntryAnalysis::has_separator() { return !separators().empty(); }

EntryAnalysis& EntryAnalysis::dual_analysis() {
  if (!dual_) dual_ = std::make_unique<EntryAnalysis>(dual(m_));
  return *dual_;
}

bool EntryAnalysis::separator_reveals(int sep_idx, int class_idx) {
  separators();
  build_classes();
  if (reveal_memo_.empty())
    reveal_memo_.assign(seps_.size(),
                        std::vector<signed char>(classes_.classes.size(), -1));
  signed char& slot = reveal_memo_[sep_idx][class_idx];
  if (slot >= 0) return slot == 1;
  const ThetaSeparator& sep = seps_[sep_idx];
  bool result = false;
  if (sep.orientation == ThetaSeparator::Orientation::primal) {
    result = (n_revealing_mask(class_idx) & sep.z) != 0;
  } else {
    // literally: some z in Z is N*-revealing in the dual
    EntryAnalysis& da = dual_analysis();
    const int dj = da.classes().find(dual(classes_.classes[class_idx].rep));
    result = dj >= 0 && (da.n_revealing_mask(dj) & sep.z) != 0;
  }
  slot = result ? 1 : 0;
  return result;
}

bool EntryAnalysis::any_separator_reveals(int class_idx) {
  separators();
  for (std::size_t s = 0; s < seps_.size(); ++s)
    if (separator_reveals(static_cast<int>(s), class_idx)) return true;
  return false;
}

const std::vector<FanOrdering>& EntryAnalysis::fans() {
  if (!fans_built_) {
    fans_built_ = true;
    fans_ = maximal_fans(m_);
  }
  return fans_;
}

const std::vector<Mask>& EntryAnalysis::segment_list() {
  if (!segments_built_) {
    segments_built_ = true;
    segments_ = segments(m_);
  }
  return segments_;
}

}  // namespace m3k
