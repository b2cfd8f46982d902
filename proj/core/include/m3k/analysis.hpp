#pragma once

#include <memory>
#include <vector>

#include "m3k/connectivity.hpp"
#include "m3k/elasticity.hpp"
#include "m3k/matroid.hpp"
#include "m3k/structures.hpp"

namespace m3k {

// Lazily computed per-matroid products shared by the verification checks.
// Not thread-safe; intended to live inside one worker task.
class EntryAnalysis {
 public:
  explicit EntryAnalysis(const Matroid& m);

  const Matroid& matroid() const { return m_; }
  int size() const { return m_.size(); }
  bool three_connected() const { return three_conn_; }

  bool has_4fan();
  bool path_width_three();

  // Per-element removals.
  struct Derived {
    Matroid si, co, con, del;
    bool si3c = false, co3c = false, con2c = false, del2c = false;
  };
  const std::vector<Derived>& derived();
  Mask si3c_mask();
  Mask co3c_mask();
  Mask elastic_mask();

  const MinorClassSet& classes();
  const std::vector<std::vector<MinorWitness>>& witnesses();

  // Elements e such that the named derived matroid has class j as a minor.
  Mask cls_si(int j);
  Mask cls_co(int j);
  Mask cls_con(int j);
  Mask cls_del(int j);

  Mask n_elastic_mask(int j);
  Mask n_revealing_mask(int j);

  const std::vector<VerticalSep3>& vseps();
  const std::vector<VerticalSep3>& cseps();
  bool vsep_maximal(const VerticalSep3& s);  // within its kind

  const std::vector<ThetaSeparator>& separators();
  bool has_separator();
  bool separator_reveals(int sep_idx, int class_idx);
  bool any_separator_reveals(int class_idx);

  const std::vector<FanOrdering>& fans();
  const std::vector<Mask>& segment_list();

 private:
  void build_derived();
  void build_classes();
  void build_membership();
  EntryAnalysis& dual_analysis();

  Matroid m_;
  bool three_conn_ = false;

  bool derived_built_ = false;
  std::vector<Derived> derived_;
  Mask si3c_ = 0, co3c_ = 0;

  bool classes_built_ = false;
  MinorClassSet classes_;

  bool witnesses_built_ = false;
  std::vector<std::vector<MinorWitness>> witnesses_;

  bool membership_built_ = false;
  std::vector<Mask> cls_si_, cls_co_, cls_con_, cls_del_;

  bool vseps_built_ = false;
  std::vector<VerticalSep3> vseps_, cseps_;

  bool seps_built_ = false;
  std::vector<ThetaSeparator> seps_;

  bool fans_built_ = false;
  std::vector<FanOrdering> fans_;

  bool segments_built_ = false;
  std::vector<Mask> segments_;

  int has4fan_ = -1;
  int pw3_ = -1;

  std::unique_ptr<EntryAnalysis> dual_;
  std::vector<std::vector<signed char>> reveal_memo_;  // [sep][class], -1 unknown
};

}  // namespace m3k
