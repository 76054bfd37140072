#include "milnorfiber/cluster.hpp"

#include <algorithm>
#include <deque>

namespace mf {
namespace {

// Blowup state machine of one branch chain, driven by the characteristic
// skeleton alone (chained subtractive Euclid). A is the current ramification
// scale, B the distance to the next characteristic exponent in t-units.
struct ChainMachine {
  long A = 1;
  long B = 0;
  std::deque<long> queue;
  bool none = true;  // past the last characteristic exponent

  static ChainMachine init(long e, const std::vector<Rat>& chars) {
    ChainMachine m;
    m.A = e;
    long prev = 0;
    for (const auto& c : chars) {
      Rat t = c * Rat(e);
      if (t.get_den() != 1) throw internal_error("characteristic exponent off the e-grid");
      long ti = static_cast<long>(t.get_num().get_si());
      if (ti <= prev) throw internal_error("characteristic exponents not increasing");
      m.queue.push_back(ti - prev);
      prev = ti;
    }
    if (!m.queue.empty()) {
      m.B = m.queue.front();
      m.queue.pop_front();
      m.none = false;
      if (m.B <= m.A) throw internal_error("characteristic exponent not above 1");
    } else {
      if (e != 1) throw internal_error("ramified branch without characteristic exponents");
      m.none = true;
    }
    return m;
  }

  long mult() const { return none ? A : std::min(A, B); }
  bool swap_mover() const { return !none && B < A; }
  // local leading characteristic exponent; only meaningful when !none
  Rat gamma() const {
    Rat r(B, A);
    r.canonicalize();
    return r;
  }

  void refill() {
    if (queue.empty()) {
      if (A != 1) throw internal_error("chain ended before reaching ramification 1");
      none = true;
      B = 0;
    } else {
      B = queue.front();
      queue.pop_front();
      none = false;
    }
  }
  void step_free() {
    if (none) return;
    if (B == A) {
      B = 0;
      refill();
    } else {
      B -= A;  // B > A here
    }
  }
  void step_swap() {
    long nA = B, nB = A - B;
    A = nA;
    B = nB;
    if (B == 0) throw internal_error("swap produced a zero distance");
  }
};

enum class MoveKind { Free, CornerY, Swap };

MoveKind classify(const ChainMachine& m, bool ax_y_div) {
  if (m.swap_mover()) return MoveKind::Swap;
  if (ax_y_div && (m.none || m.gamma() > 1)) return MoveKind::CornerY;
  return MoveKind::Free;
}

}  // namespace

std::vector<long> mult_sequence_from_chars(long e, const std::vector<Rat>& chars) {
  ChainMachine m = ChainMachine::init(e, chars);
  bool ax_y_div = false;
  bool have_ax_x = false;  // no divisor axes at the origin
  std::vector<long> out;
  for (int guard = 0; guard < 100000; ++guard) {
    out.push_back(m.mult());
    MoveKind k = classify(m, ax_y_div);
    if (k == MoveKind::Swap) {
      if (!have_ax_x) {
        // tangent to a coordinate axis that is not a divisor: a free point
        // (cannot happen after the shear, but keep the machine total)
        m.step_swap();
        ax_y_div = false;
        have_ax_x = true;
        if (m.A == 1 && !m.swap_mover()) break;
        continue;
      }
      m.step_swap();
      ax_y_div = true;
      have_ax_x = true;
      continue;
    }
    if (k == MoveKind::Free && m.A == 1) break;
    m.step_free();
    if (k == MoveKind::Free) ax_y_div = false;
    have_ax_x = true;
  }
  return out;
}

long pairwise_intersection(long e1, const std::vector<Rat>& chars1, long e2,
                           const std::vector<Rat>& chars2, const Rat& delta) {
  ChainMachine m1 = ChainMachine::init(e1, chars1);
  ChainMachine m2 = ChainMachine::init(e2, chars2);
  Rat d = delta;
  bool ax_y_div = false;
  long i0 = 0;
  for (int guard = 0; guard < 100000; ++guard) {
    i0 += m1.mult() * m2.mult();
    MoveKind k1 = classify(m1, ax_y_div);
    MoveKind k2 = classify(m2, ax_y_div);
    if (k1 != k2) return i0;
    if (k1 == MoveKind::Swap) {
      Rat x1 = m1.gamma(), x2 = m2.gamma();
      if (x1 == x2) {
        if (d < x1) throw internal_error("divergence below the shared leading exponent");
        d = (d + 1 - 2 * x1) / x1;
      } else {
        Rat g1 = (1 - x1) / x1, g2 = (1 - x2) / x2;
        d = std::min(g1, g2);
      }
      m1.step_swap();
      m2.step_swap();
      ax_y_div = true;
      continue;
    }
    if (k1 == MoveKind::CornerY) {
      d = d - 1;
      m1.step_free();
      m2.step_free();
      continue;  // ax_y stays a divisor
    }
    // both Free: together only while the series still agree at this depth
    if (d <= 1) {
      if (d < 1) throw internal_error("divergence exponent below the current depth");
      return i0;
    }
    d = d - 1;
    m1.step_free();
    m2.step_free();
    ax_y_div = false;
  }
  throw internal_error("pairwise intersection did not terminate");
}

Rat instance_divergence_from_data(const std::vector<PuiseuxBranch>& branches,
                                  const std::vector<ContactRecord>& contacts, int bi, long ii,
                                  int bj, long ij) {
  if (bi == bj) {
    const auto& br = branches[bi];
    if (ii == ij) throw internal_error("divergence of an instance with itself");
    long s = br.orbit_size;
    for (const auto& [exp, n] : br.splitting)
      if (ii / (s / n) != ij / (s / n)) return exp;
    throw internal_error("conjugate instances never diverge");
  }
  int a = bi, b = bj;
  long ia = ii, ib = ij;
  if (a > b) {
    std::swap(a, b);
    std::swap(ia, ib);
  }
  const ContactRecord* cr = nullptr;
  for (const auto& c : contacts)
    if (c.b1 == a && c.b2 == b) {
      cr = &c;
      break;
    }
  if (!cr) throw internal_error("missing contact record");
  long sa = branches[a].orbit_size, sb = branches[b].orbit_size;
  for (const auto& [exp, n] : cr->prefix_levels)
    if (ia / (sa / n) != ib / (sb / n)) return exp;
  return cr->contact_exponent;
}

namespace {

struct InstState {
  ChainMachine mc;
  int branch = 0;
  long conj = 0;
  int germ = 0;
  long alpha = 1;
};

struct Group {
  std::vector<int> members;  // instance ids
  int ax_x = -1, ax_y = -1;  // cluster points whose divisors are the axes
  std::map<std::pair<int, int>, Rat> delta;  // local divergence per pair
};

struct Builder {
  const std::vector<PuiseuxBranch>& branches;
  ClusterTree tree;
  std::vector<InstState> st;

  Rat& delta_of(Group& g, int i, int j) {
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = g.delta.find(key);
    if (it == g.delta.end()) throw internal_error("missing pair divergence");
    return it->second;
  }

  int new_point(int parent, std::vector<int> prox, bool satellite) {
    ClusterPoint p;
    p.id = static_cast<int>(tree.points.size());
    p.parent = parent;
    p.proximate_to = std::move(prox);
    p.satellite = satellite;
    tree.points.push_back(std::move(p));
    return tree.points.back().id;
  }

  void emit_point_data(int pid, const Group& g) {
    ClusterPoint& p = tree.points[pid];
    for (int id : g.members) {
      long m = st[id].mc.mult();
      p.branches_through.push_back(id);
      p.instance_mult[id] = m;
      if (st[id].germ == 0)
        p.strict_mult_f += st[id].alpha * m;
      else
        p.strict_mult_g += st[id].alpha * m;
    }
  }

  // process the group sitting at point pid (machines BEFORE their move)
  void process(int pid, Group g, int depth) {
    if (depth > 5000) throw internal_error("cluster construction too deep");
    emit_point_data(pid, g);

    // classify moves
    std::vector<int> swapm, cornerm, freem;
    bool ax_y_div = g.ax_y >= 0;
    for (int id : g.members) {
      switch (classify(st[id].mc, ax_y_div)) {
        case MoveKind::Swap:
          swapm.push_back(id);
          break;
        case MoveKind::CornerY:
          cornerm.push_back(id);
          break;
        case MoveKind::Free:
          freem.push_back(id);
          break;
      }
    }

    struct Child {
      std::vector<int> members;
      MoveKind kind;
    };
    std::vector<Child> children;
    if (!swapm.empty()) children.push_back({swapm, MoveKind::Swap});
    if (!cornerm.empty()) children.push_back({cornerm, MoveKind::CornerY});
    // free movers split by "still together at depth 1": delta > 1
    std::vector<int> rest = freem;
    std::sort(rest.begin(), rest.end());
    while (!rest.empty()) {
      int seed = rest.front();
      std::vector<int> cls = {seed};
      std::vector<int> keep;
      for (std::size_t k = 1; k < rest.size(); ++k) {
        int other = rest[k];
        Rat d = delta_of(g, seed, other);
        if (d < 1) throw internal_error("free-move divergence below depth");
        if (d > 1)
          cls.push_back(other);
        else
          keep.push_back(other);
      }
      // transitivity check within the class
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b)
          if (!(delta_of(g, cls[a], cls[b]) > 1))
            throw internal_error("divergence relation is not an ultrametric");
      children.push_back({cls, MoveKind::Free});
      rest = std::move(keep);
    }

    // deterministic order
    std::sort(children.begin(), children.end(), [](const Child& A, const Child& B) {
      return *std::min_element(A.members.begin(), A.members.end()) <
             *std::min_element(B.members.begin(), B.members.end());
    });

    for (auto& ch : children) {
      // stop rule: a lone branch that is smooth, transversal and free ends here
      if (ch.members.size() == 1) {
        int id = ch.members[0];
        bool can_stop = false;
        if (ch.kind == MoveKind::Free) {
          can_stop = (st[id].mc.A == 1);
        } else if (ch.kind == MoveKind::Swap && g.ax_x < 0) {
          // tangent to a non-divisor axis: the would-be point is still free;
          // unreachable after the shear, kept for safety
          ChainMachine probe = st[id].mc;
          probe.step_swap();
          can_stop = (probe.A == 1 && !probe.swap_mover());
        }
        if (can_stop) {
          tree.instances[id].last_point = pid;
          continue;
        }
      }

      std::vector<int> prox = {pid};
      bool satellite = false;
      int nax_x = pid, nax_y = -1;
      if (ch.kind == MoveKind::Swap) {
        if (g.ax_x >= 0) {
          prox.push_back(g.ax_x);
          satellite = true;
        }
        nax_y = g.ax_x;
      } else if (ch.kind == MoveKind::CornerY) {
        if (g.ax_y < 0) throw internal_error("corner move without a divisor axis");
        prox.push_back(g.ax_y);
        satellite = true;
        nax_y = g.ax_y;
      }
      int qid = new_point(pid, prox, satellite);

      Group cg;
      cg.members = ch.members;
      cg.ax_x = nax_x;
      cg.ax_y = nax_y;
      // update pair divergences, then step the machines
      for (std::size_t a = 0; a < ch.members.size(); ++a) {
        for (std::size_t b = a + 1; b < ch.members.size(); ++b) {
          int i = ch.members[a], j = ch.members[b];
          Rat d = delta_of(g, i, j);
          Rat nd;
          if (ch.kind == MoveKind::Swap) {
            Rat x1 = st[i].mc.gamma(), x2 = st[j].mc.gamma();
            if (x1 == x2) {
              if (d < x1) throw internal_error("swap divergence below leading exponent");
              nd = (d + 1 - 2 * x1) / x1;
            } else {
              nd = std::min((1 - x1) / x1, (1 - x2) / x2);
            }
          } else {
            nd = d - 1;
          }
          cg.delta[i < j ? std::make_pair(i, j) : std::make_pair(j, i)] = nd;
        }
      }
      for (int id : ch.members) {
        if (ch.kind == MoveKind::Swap)
          st[id].mc.step_swap();
        else
          st[id].mc.step_free();
      }
      process(qid, std::move(cg), depth + 1);
    }
  }
};

}  // namespace

ClusterTree build_cluster(const std::vector<PuiseuxBranch>& branches,
                          const std::vector<ContactRecord>& contacts) {
  Builder bld{branches, {}, {}};

  // unfold instances
  for (std::size_t b = 0; b < branches.size(); ++b) {
    for (long c = 0; c < branches[b].orbit_size; ++c) {
      InstState s;
      s.mc = ChainMachine::init(branches[b].e, branches[b].char_exponents);
      s.branch = static_cast<int>(b);
      s.conj = c;
      s.germ = branches[b].germ;
      s.alpha = branches[b].alpha;
      bld.st.push_back(std::move(s));
      BranchInstance bi;
      bi.branch = static_cast<int>(b);
      bi.conj = c;
      bi.germ = branches[b].germ;
      bi.alpha = branches[b].alpha;
      bld.tree.instances.push_back(bi);
    }
  }

  Group g0;
  for (std::size_t i = 0; i < bld.st.size(); ++i) g0.members.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < bld.st.size(); ++i)
    for (std::size_t j = i + 1; j < bld.st.size(); ++j)
      g0.delta[{static_cast<int>(i), static_cast<int>(j)}] = instance_divergence_from_data(
          branches, contacts, bld.st[i].branch, bld.st[i].conj, bld.st[j].branch, bld.st[j].conj);

  int origin = bld.new_point(-1, {}, false);
  bld.process(origin, std::move(g0), 0);

  for (const auto& inst : bld.tree.instances)
    if (inst.last_point < 0) throw internal_error("a branch never reached its arrow point");
  return bld.tree;
}

long cluster_noether_fg(const ClusterTree& t) {
  long s = 0;
  for (const auto& p : t.points) s += p.strict_mult_f * p.strict_mult_g;
  return s;
}

}  // namespace mf
