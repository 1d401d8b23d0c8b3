#include "topoplan/coord.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "topoplan/errors.hpp"

namespace topo {

namespace {

std::vector<std::string> sign_vectors(int len) {
  std::vector<std::string> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string s(static_cast<std::size_t>(len), '-');
    for (int k = 0; k < len; ++k) {
      if (mask & (1 << k)) s[static_cast<std::size_t>(k)] = '+';
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Orientation of a letter: which side of the deleted set counts as the
// positive crossing direction. Chosen so the loop words around the triple
// intersections come out in the reduced form below.
int orient(const std::string& sigma) {
  return sigma.find('+') != std::string::npos ? 1 : -1;
}

struct PairLetter {
  int m, p;  // 1-based robot indices, m < p
  std::string sigma;
  std::string id;
};

std::vector<PairLetter> all_pair_letters(int robots) {
  std::vector<PairLetter> out;
  for (int m = 1; m <= robots; ++m) {
    for (int p = m + 1; p <= robots; ++p) {
      for (const auto& sigma : sign_vectors(p - m - 1)) {
        out.push_back({m, p, sigma, coord_letter_id(m, p, sigma)});
      }
    }
  }
  return out;
}

}  // namespace

std::string coord_letter_id(int m, int p, const std::string& sigma) {
  std::string id = "u:" + std::to_string(m) + "," + std::to_string(p);
  if (!sigma.empty()) id += "/" + sigma;
  return id;
}

std::vector<std::string> enumerate_letters(int robots) {
  std::vector<std::string> out;
  for (const auto& l : all_pair_letters(robots)) out.push_back(l.id);
  return out;
}

Presentation coordination_presentation(int robots) {
  if (robots < 1) throw InvalidSceneError("need at least one robot");
  std::set<std::string> alphabet;
  for (const auto& l : all_pair_letters(robots)) alphabet.insert(l.id);

  auto push_pow = [](Word& w, const std::string& id, int e) { w.push(Letter{id, e}); };

  std::vector<Word> relations;
  for (int m = 1; m <= robots; ++m) {
    for (int n = m + 1; n <= robots; ++n) {
      for (int p = n + 1; p <= robots; ++p) {
        for (const auto& alpha : sign_vectors(n - m - 1)) {
          for (const auto& beta : sign_vectors(p - n - 1)) {
            std::string a_id = coord_letter_id(m, n, alpha);
            std::string d_id = coord_letter_id(n, p, beta);
            std::string b_id = coord_letter_id(m, p, alpha + "+" + beta);
            std::string c_id = coord_letter_id(m, p, alpha + "-" + beta);
            int ea = orient(alpha);
            int ed = orient(beta);
            int eb = 1;
            int ec = orient(alpha + "-" + beta);
            // loop around the triple intersection
            Word w1;
            push_pow(w1, a_id, -ea);
            push_pow(w1, c_id, -ec);
            push_pow(w1, d_id, -ed);
            push_pow(w1, a_id, ea);
            push_pow(w1, b_id, eb);
            push_pow(w1, d_id, ed);
            relations.push_back(w1);
            // loops around the two partial intersections
            Word w2;
            push_pow(w2, a_id, -ea);
            push_pow(w2, c_id, -ec);
            push_pow(w2, a_id, ea);
            push_pow(w2, b_id, eb);
            relations.push_back(w2);
            Word w3;
            push_pow(w3, c_id, -ec);
            push_pow(w3, d_id, -ed);
            push_pow(w3, b_id, eb);
            push_pow(w3, d_id, ed);
            relations.push_back(w3);
          }
        }
      }
    }
  }

  auto letters = all_pair_letters(robots);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      const auto& x = letters[i];
      const auto& y = letters[j];
      if (x.m == y.m || x.m == y.p || x.p == y.m || x.p == y.p) continue;
      Word w;
      w.push(Letter{x.id, 1});
      w.push(Letter{y.id, 1});
      w.push(Letter{x.id, -1});
      w.push(Letter{y.id, -1});
      relations.push_back(w);
    }
  }

  return Presentation(std::move(alphabet), std::move(relations));
}

bool joint_move_collides(const JointConfig& a, const JointConfig& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Vec2 r0 = a[j] - a[i], r1 = b[j] - b[i];
      // the relative displacement passes through the origin
      if (cross(r0, r1) == 0 && dot(r0, r1) <= 0) return true;
    }
  }
  return false;
}

Word edge_signature_coord(const JointConfig& a, const JointConfig& b) {
  if (a.size() != b.size() || a.empty()) throw InvalidSceneError("bad joint configurations");
  if (joint_move_collides(a, b)) throw CollisionError("robots collide during joint move");

  // Symbolic perturbation: robot i is offset by eps^i in x (and by a second,
  // infinitely smaller family in y), so every tie below is broken exactly
  // and identically in both traversal directions.
  struct Hit {
    double t;
    int m, p;        // 1-based robot indices of the crossing pair
    double inv_den;  // 1 / (d0 - d1): the crossing time shifts by
                     // (eps^m - eps^p) * inv_den
    Letter letter;
  };
  std::vector<Hit> hits;
  int robots = static_cast<int>(a.size());

  for (int i = 0; i < robots; ++i) {
    for (int j = i + 1; j < robots; ++j) {
      int m = i + 1, p = j + 1;
      double d0 = a[i].x - a[j].x;
      double d1 = b[i].x - b[j].x;
      // an exact tie counts as positive: eps^m dominates eps^p
      bool s0 = d0 >= 0, s1 = d1 >= 0;
      if (s0 == s1) continue;
      double dden = d0 - d1;
      double t = d0 / dden;

      auto pos = [&](int k, double tt) {
        return Vec2{a[k].x + tt * (b[k].x - a[k].x), a[k].y + tt * (b[k].y - a[k].y)};
      };
      auto vel = [&](int k) { return b[k] - a[k]; };

      // letter only on the y_m < y_p side; on an exact tie expand in eps:
      // the eps^m coefficient is (vy_m - vy_p)/dden, and the y-family
      // offset finally lands on the positive (no-letter) side
      double ydiff = pos(i, t).y - pos(j, t).y;
      if (ydiff > 0) continue;
      if (ydiff == 0) {
        double c = (vel(i).y - vel(j).y) / dden;
        if (c >= 0) continue;
      }

      std::string sigma;
      double xc = pos(i, t).x;
      for (int k = i + 1; k < j; ++k) {
        double v = pos(k, t).x - xc;
        if (v == 0) {
          // eps^m coefficient of x_n - x_cross; if it also vanishes the
          // eps^n coefficient +1 decides
          double cm = (vel(k).x - vel(i).x) / dden - 1.0;
          v = cm != 0 ? cm : 1.0;
        }
        sigma += v > 0 ? '-' : '+';
      }

      int direction = s1 ? 1 : -1;  // sign of d(x_m - x_p)/dt at the crossing
      hits.push_back({t, m, p, 1.0 / dden,
                      Letter{coord_letter_id(m, p, sigma), direction * orient(sigma)}});
    }
  }

  std::sort(hits.begin(), hits.end(), [robots](const Hit& l, const Hit& r) {
    if (l.t != r.t) return l.t < r.t;
    // compare the eps expansions of the two perturbed crossing times
    for (int e = 1; e <= robots; ++e) {
      double cl = (e == l.m ? l.inv_den : 0.0) - (e == l.p ? l.inv_den : 0.0);
      double cr = (e == r.m ? r.inv_den : 0.0) - (e == r.p ? r.inv_den : 0.0);
      if (cl != cr) return cl < cr;
    }
    return false;
  });
  Word w;
  for (const auto& h : hits) w.push(h.letter);
  return w;
}

Word path_signature_coord(const std::vector<JointConfig>& path) {
  Word w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    w = compose(w, edge_signature_coord(path[i], path[i + 1]));
  }
  return w;
}

}  // namespace topo
