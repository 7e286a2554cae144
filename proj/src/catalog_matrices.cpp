// Explicit transition matrices, one template per family, stored as cell
// expressions in the family's letters.  Orientation is column = parent; every
// template below was checked against the patch simulator in that orientation,
// so none needed transposing.
#include "tessgrowth/transition.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tg {

namespace {

struct Template {
  const char* id;
  int n;
  std::vector<const char*> rows;
  // Root (a letter, or a literal valence) -> first distribution vector.
  std::vector<std::pair<const char*, const char*>> v1;
  const char* weights;  // "" = all ones
};

// Rows are read off the offspring diagrams of each family.  Known problems
// with individual templates are listed in README.md (they are kept as
// printed; the oracle tests report them).
const std::vector<Template>& templates() {
  static const std::vector<Template> t = {
  {"[p,p,q]", 4,
   {
      "(p-4)/2, p-4, -1, 0",
      "(q-4)/2, 0, 0, -1",
      "1, 0, 0, 0",
      "0, 1, 0, 0"
   },
   {{"p", "p, 0, 0, 0"}, {"q", "0, q, 0, 0"}}, ""},
  {"[p,q,r]", 6,
   {
      "0, (p-4)/2, (p-4)/2, -1, 0, 0",
      "(q-4)/2, 0, (q-4)/2, 0, -1, 0",
      "(r-4)/2, (r-4)/2, 0, 0, 0, -1",
      "1, 0, 0, 0, 0, 0",
      "0, 1, 0, 0, 0, 0",
      "0, 0, 1, 0, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0"}}, ""},
  {"[4,p,q]", 4,
   {
      "0, (p-4)/2, -1, 0",
      "(q-4)/2, 0, 0, -1",
      "1, 0, 0, 0",
      "0, 1, 0, 0"
   },
   {{"p", "p, 0, 0, 0"}, {"q", "0, q, 0, 0"}}, ""},
  {"[p,p,3]", 2,
   {
      "(p)/2-4, -1",
      "1, 0"
   },
   {{"p", "p/2, 0"}}, "2, 4"},
  {"[p,p,q,q]", 5,
   {
      "(p-4)/2, (3p-10)/2, (p-4)/2, 0, p-4",
      "(3q-10)/2, (q-4)/2, (q-4)/2, q-4, 0",
      "1, 1, 1, 0, 0",
      "0, 1, 0, 0, 1",
      "1, 0, 0, 1, 0"
   },
   {{"p", "p, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0"}}, ""},
  {"[3,p,4,p]", 7,
   {
      "p-3, p-4, p-4, (p-4)/2, (p-4)/2, -2, 0",
      "0, 0, 0, 0, 0, 0, 0",
      "0, 1, 0, 0, 0, 0, 0",
      "1, 2, 0, 0, 1, -2, 0",
      "0, 0, 2, 0, 0, 2, 0",
      "1/2, 0, 0, 1/2, 0, 0, 0",
      "0, 0, 0, 0, 0, 1, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}}, ""},
  {"[3,p,q,p]", 6,
   {
      "p-3, p-4, p-4, (p-4)/2, (p-4)/2, 0",
      "0, 0, 0, 0, 0, 0",
      "(q-4)/2, q-3, 0, 0, (q-4)/2, -1",
      "1, 2, 0, 0, 1, 0",
      "0, 0, 2, 0, 0, 0",
      "1/2, 0, 0, 1/2, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}, {"3", "0, 3, 0, 0, 0, 0"}, {"q", "0, 0, q, 0, 0, 0"}}, ""},
  {"[p,q,p,r]", 5,
   {
      "p-3, p-4, p-4, (p-4)/2, (p-4)/2",
      "(q-4)/2, 0, q-3, 0, (q-4)/2",
      "(r-4)/2, r-3, 0, (r-4)/2, 0",
      "1, 0, 2, 0, 1",
      "1, 2, 0, 1, 0"
   },
   {{"p", "p, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0"}, {"r", "0, 0, r, 0, 0"}}, ""},
  {"[p,q,r,s]", 8,
   {
      "0, (p-4)/2, p-3, (p-4)/2, 0, 0, (p-4)/2, (p-4)/2",
      "(q-4)/2, 0, (q-4)/2, q-3, (q-4)/2, 0, 0, (q-4)/2",
      "r-3, (r-4)/2, 0, (r-4)/2, (r-4)/2, (r-4)/2, 0, 0",
      "(s-4)/2, s-3, (s-4)/2, 0, 0, (s-4)/2, (s-4)/2, 0",
      "0, 1, 1, 0, 0, 0, 1, 0",
      "0, 0, 1, 1, 0, 0, 0, 1",
      "1, 0, 0, 1, 1, 0, 0, 0",
      "1, 1, 0, 0, 0, 1, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0, 0"}, {"s", "0, 0, 0, s, 0, 0, 0, 0"}}, ""},
  {"[3,3,3,3,p]", 6,
   {
      "0, 0, (p-4)/2, 0, (p-4)/2, -1",
      "0, 0, 1, 0, 0, 0",
      "1, 0, 0, 0, 0, 0",
      "0, 0, 1/2, 0, 1/2, 0",
      "1, 1/2, 0, 0, 0, 0",
      "0, 1/2, 0, 0, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}}, ""},
  {"[3,3,3,p,p]", 6,
   {
      "(p-4)/2, (p-4)/2, (3p-10)/2, 0, p-4, (p-4)/2",
      "1, 1, 0, 0, 0, 0",
      "1, 0, 0, 0, 0, 0",
      "0, 0, 1, 0, 1, 0",
      "1/2, 0, 0, 1, 0, 0",
      "0, 1/2, 1/2, 0, 0, 1/2"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}}, ""},
  {"[3,3,p,3,p]", 3,
   {
      "p-3, (p-4)/2, (p-4)/2",
      "1, 1, 0",
      "1, 1/2, 1/2"
   },
   {{"p", "p, 0, 0"}}, ""},
  {"[3,3,p,3,q]", 6,
   {
      "0, p-3, 0, (p-4)/2, (p-4)/2, 0",
      "q-3, 0, (q-4)/2, 0, 0, (q-4)/2",
      "0, 1, 0, 1, 0, 0",
      "1, 0, 1, 0, 0, 0",
      "1, 0, 1/2, 0, 0, 1/2",
      "0, 1, 0, 1/2, 1/2, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0"}}, ""},
  {"[p,p,q,r,q]", 6,
   {
      "(p-4)/2, (3p-10)/2, 2p-6, (p-4)/2, 0, (3p-10)/2",
      "(3q-10)/2, q-3, q-4, q-3, q-4, (q-4)/2",
      "r-3, (r-4)/2, 0, (r-4)/2, r-3, 0",
      "1, 1, 2, 1, 0, 1",
      "0, 1, 1, 0, 0, 1",
      "2, 1, 0, 1, 2, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0"}}, ""},
  {"[p,p,q,3,q]", 6,
   {
      "(p-4)/2, (3p-10)/2, (p-4)/2, 0, (3p-10)/2, p-4",
      "(3q-10)/2, q-3, q-3, q-4, (q-4)/2, 0",
      "1, 1, 1, 0, 1, 0",
      "0, 1, 0, 0, 1, 1",
      "2, 0, 0, 2, 0, 0",
      "0, 1/2, 1/2, 0, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0"}}, ""},
  {"[p,q,r,s,t]", 10,
   {
      "0, (p-4)/2, p-3, p-3, (p-4)/2, 0, 0, (p-4)/2, p-3, (p-4)/2",
      "(q-4)/2, 0, (q-4)/2, q-3, q-3, (q-4)/2, 0, 0, (q-4)/2, q-3",
      "r-3, (r-4)/2, 0, (r-4)/2, r-3, r-3, (r-4)/2, 0, 0, (r-4)/2",
      "s-3, s-3, (s-4)/2, 0, (s-4)/2, (s-4)/2, s-3, (s-4)/2, 0, 0",
      "(t-4)/2, t-3, t-3, (t-4)/2, 0, 0, (t-4)/2, t-3, (t-4)/2, 0",
      "0, 1, 1, 1, 0, 0, 0, 1, 1, 0",
      "0, 0, 1, 1, 1, 0, 0, 0, 1, 1",
      "1, 0, 0, 1, 1, 1, 0, 0, 0, 1",
      "1, 1, 0, 0, 1, 1, 1, 0, 0, 0",
      "1, 1, 1, 0, 0, 0, 1, 1, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0, 0, 0, 0"}, {"s", "0, 0, 0, s, 0, 0, 0, 0, 0, 0"}, {"t", "0, 0, 0, 0, t, 0, 0, 0, 0, 0"}}, ""},
  {"[p,p,q,p,p,q]", 4,
   {
      "(5p-16)/2, 3p-10, 2p-7, 2p-6",
      "(3q-10)/2, q-3, q-3, q-4",
      "3, 2, 2, 2",
      "1, 2, 1, 1"
   },
   {{"p", "p, 0, 0, 0"}, {"q", "0, q, 0, 0"}}, ""},
  {"[p,q,q,p,r,r]", 7,
   {
      "p-3, (3p-10)/2, (3p-10)/2, p-3, p-3, p-4, p-4",
      "(3q-10)/2, (q-4)/2, 2q-6, (3q-10)/2, (q-4)/2, 0, 2q-6",
      "(3r-10)/2, 2r-6, (r-4)/2, (r-4)/2, (3r-10)/2, 2r-6, 0",
      "1, 2, 1, 1, 1, 2, 0",
      "1, 1, 2, 1, 1, 0, 2",
      "1, 0, 1, 1, 0, 0, 1",
      "1, 1, 0, 0, 1, 1, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0"}}, ""},
  {"[p,q,p,r,q,r]", 7,
   {
      "p-3, p-4, (3p-10)/2, 2p-6, p-3, (p-4)/2, (3p-10)/2",
      "(q-4)/2, 0, q-3, q-3, (q-4)/2, 0, q-3",
      "(3r-10)/2, 2r-6, r-3, r-4, r-3, (3r-10)/2, (r-4)/2",
      "q-3, q-3, (q-4)/2, 0, (q-4)/2, q-3, 0",
      "1, 2, 1, 2, 1, 1, 1",
      "1, 0, 2, 2, 1, 0, 2",
      "2, 2, 1, 0, 1, 2, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0"}}, ""},
  {"[p,q,r,p,q,r]", 6,
   {
      "p-3, (3p-10)/2, (3p-10)/2, p-3, p-3, p-4",
      "(3q-10)/2, q-3, (3q-10)/2, q-4, q-3, q-3",
      "(3r-10)/2, (3r-10)/2, r-3, r-3, r-4, r-3",
      "1, 2, 1, 1, 1, 1",
      "1, 1, 2, 1, 1, 1",
      "2, 1, 1, 1, 1, 1"
   },
   {{"p", "p, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0"}}, ""},
  {"[p,q,p,r,s,r]", 7,
   {
      "p-3, p-4, (3p-10)/2, 2p-6, p-3, (p-4)/2, (3p-10)/2",
      "(q-4)/2, 0, q-3, q-3, (q-4)/2, 0, q-3",
      "(3r-10)/2, 2r-6, r-3, r-4, r-3, (3r-10)/2, (r-4)/2",
      "s-3, s-3, (s-4)/2, 0, (s-4)/2, s-3, 0",
      "1, 2, 1, 2, 1, 1, 1",
      "1, 0, 2, 2, 1, 0, 2",
      "2, 2, 1, 0, 1, 2, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0"}, {"s", "0, 0, 0, s, 0, 0, 0"}}, ""},
  {"[p,q,r,p,s,t]", 12,
   {
      "0, (p-4)/2, p-3, p-3, p-3, (p-4)/2, 0, 0, (p-4)/2, p-3, p-3, (p-4)/2",
      "(q-4)/2, 0, (q-4)/2, q-3, q-3, q-3, (q-4)/2, 0, 0, (q-4)/2, q-3, q-3",
      "r-3, (r-4)/2, 0, (r-4)/2, r-3, r-3, r-3, (r-4)/2, 0, 0, (r-4)/2, r-3",
      "p-3, p-3, (p-4)/2, 0, (p-4)/2, p-3, p-3, p-3, (p-4)/2, 0, 0, (p-4)/2",
      "s-3, s-3, s-3, (s-4)/2, 0, (s-4)/2, (s-4)/2, s-3, s-3, (s-4)/2, 0, 0",
      "(t-4)/2, t-3, t-3, t-3, (t-4)/2, 0, 0, (t-4)/2, t-3, t-3, (t-4)/2, 0",
      "0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0",
      "1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1",
      "1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1",
      "1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1",
      "1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 0",
      "0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"s", "0, 0, 0, 0, s, 0, 0, 0, 0, 0, 0, 0"}, {"t", "0, 0, 0, 0, 0, t, 0, 0, 0, 0, 0, 0"}}, ""},
  {"[p,q,r,s,t,u]", 12,
   {
      "0, (p-4)/2, p-3, p-3, p-3, (p-4)/2, 0, 0, (p-4)/2, p-3, p-3, (p-4)/2",
      "(q-4)/2, 0, (q-4)/2, q-3, q-3, q-3, (q-4)/2, 0, 0, (q-4)/2, q-3, q-3",
      "r-3, (r-4)/2, 0, (r-4)/2, r-3, r-3, r-3, (r-4)/2, 0, 0, (r-4)/2, r-3",
      "s-3, s-3, (s-4)/2, 0, (s-4)/2, s-3, s-3, s-3, (s-4)/2, 0, 0, (s-4)/2",
      "t-3, t-3, t-3, (t-4)/2, 0, (t-4)/2, (t-4)/2, t-3, t-3, (t-4)/2, 0, 0",
      "(u-4)/2, u-3, u-3, u-3, (u-4)/2, 0, 0, (u-4)/2, u-3, u-3, (u-4)/2, 0",
      "0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0",
      "0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1",
      "1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1",
      "1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1",
      "1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0",
      "1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"s", "0, 0, 0, s, 0, 0, 0, 0, 0, 0, 0, 0"}, {"t", "0, 0, 0, 0, t, 0, 0, 0, 0, 0, 0, 0"}, {"u", "0, 0, 0, 0, 0, u, 0, 0, 0, 0, 0, 0"}}, ""},
  {"[p,p,3,p,p,3]", 5,
   {
      "(5p-16)/2, 3p-10, 2p-7, 2p-6, p-4",
      "0, 0, 0, 0, 0",
      "2, 2, 2, 0, 2",
      "1, 0, 1, 1, 0",
      "1/2, 0, 0, 1, 0"
   },
   {{"p", "p, 0, 0, 0, 0"}}, ""},
  {"[3,3,3,p,q,p]", 7,
   {
      "p-3, p-4, p-3, (3p-10)/2, (p-4)/2, p-3, p-4",
      "(q-4)/2, 0, (q-4)/2, q-3, 0, (q-4)/2, q-3",
      "1, 2, 1, 0, 1, 0, 0",
      "1, 2, 0, 0, 1, 0, 0",
      "1, 0, 1, 2, 0, 1, 2",
      "0, 0, 1/2, 1/2, 0, 1/2, 0",
      "1/2, 0, 0, 0, 1/2, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0"}}, ""},
  {"[p,3,p,q,3,q]", 7,
   {
      "p-3, (3p-10)/2, p-3, (p-4)/2, (3p-10)/2, 0, p-4",
      "(3q-10)/2, q-3, q-3, (3q-10)/2, (q-4)/2, q-4, 0",
      "1, 1, 1, 1, 1, 0, 0",
      "0, 2, 0, 0, 2, 0, 2",
      "2, 0, 0, 2, 0, 2, 0",
      "1/2, 0, 1/2, 0, 0, 0, 0",
      "0, 1/2, 1/2, 0, 0, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0"}}, ""},
  {"[3,p,3,q,3,r]", 12,
   {
      "0, p-3, p-3, (p-4)/2, 0, 0, (p-4)/2, p-3, p-3, 0, 0, p-3",
      "q-3, 0, q-3, q-3, q-3, (q-4)/2, 0, 0, (q-4)/2, q-3, 0, 0",
      "r-3, r-3, 0, 0, (r-4)/2, r-3, r-3, (r-4)/2, 0, 0, r-3, 0",
      "0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0",
      "1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0",
      "0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0",
      "0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0",
      "1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0",
      "0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0",
      "0, 1, 0, 0, 0, 0, 1/2, 1/2, 0, 0, 1/2, 1/2",
      "0, 0, 1, 1/2, 0, 0, 0, 0, 1/2, 1/2, 0, 1/2",
      "1, 0, 0, 0, 1/2, 1/2, 0, 0, 0, 1/2, 1/2, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0, 0, 0, 0, 0, 0"}}, ""},
  {"[p,3,p,q,r,q]", 7,
   {
      "p-3, (3p-10)/2, 2p-6, p-3, (p-4)/2, (3p-10)/2, 0",
      "(3q-10)/2, q-3, q-4, q-3, (3q-10)/2, (q-4)/2, q-4",
      "r-3, (r-4)/2, 0, (r-4)/2, r-3, 0, r-3",
      "1, 1, 2, 1, 1, 1, 0",
      "0, 2, 2, 0, 0, 2, 0",
      "2, 1, 0, 1, 2, 0, 2",
      "1/2, 0, 0, 1/2, 0, 0, 0"
   },
   {{"p", "p, 0, 0, 0, 0, 0, 0"}, {"q", "0, q, 0, 0, 0, 0, 0"}, {"r", "0, 0, r, 0, 0, 0, 0"}}, ""},
  {"T1", 8,
   {
      "0, 0, 0, 1, 0, 0, 0, 0",
      "0, 0, 1, 0, 0, 0, 0, 0",
      "3, 1, 0, 1, 1, 1, 0, 0",
      "2, 5, 2, 0, 0, 2, 2, 0",
      "0, 1, 1, 0, 0, 0, 1, 0",
      "0, 0, 1, 1, 0, 0, 0, 1",
      "1, 0, 0, 1, 1, 0, 0, 0",
      "1, 1, 0, 0, 0, 1, 0, 0"
   },
   {{"4", "2, 2, 0, 0, 0, 0, 0, 0"}}, ""},
  {"T2", 8,
   {
      "0, 0, 1, 0, 0, 0, 0, 0",
      "0, 0, 0, 1, 0, 0, 0, 0",
      "3, 1, 0, 1, 1, 1, 0, 0",
      "2, 5, 2, 0, 0, 2, 2, 0",
      "0, 1, 1, 0, 0, 0, 1, 0",
      "0, 0, 1, 1, 0, 0, 0, 1",
      "1, 0, 0, 1, 1, 0, 0, 0",
      "1, 1, 0, 0, 0, 1, 0, 0"
   },
   {{"4", "4, 0, 0, 0, 0, 0, 0, 0"}}, ""},
  };
  return t;
}

class Parser {
 public:
  Parser(const std::string& s, const Bindings& b) : s_(s), b_(b) {}

  Rational parse() {
    Rational v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  const Bindings& b_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad expression '" + s_ + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }
  Rational expr() {
    Rational v = term();
    for (;;) {
      skip();
      if (i_ < s_.size() && s_[i_] == '+') { ++i_; v += term(); }
      else if (i_ < s_.size() && s_[i_] == '-') { ++i_; v -= term(); }
      else return v;
    }
  }
  Rational term() {
    Rational v = unary();
    for (;;) {
      skip();
      if (i_ < s_.size() && s_[i_] == '*') { ++i_; v *= unary(); }
      else if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (starts_factor()) {
        v *= atom();  // juxtaposition
      } else {
        return v;
      }
    }
  }
  Rational unary() {
    skip();
    if (i_ < s_.size() && s_[i_] == '-') { ++i_; return -unary(); }
    if (i_ < s_.size() && s_[i_] == '+') { ++i_; return unary(); }
    return atom();
  }
  Rational atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Rational v = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') fail("missing )");
      ++i_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) n = n * 10 + (s_[i_++] - '0');
      return Rational(n);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i_;
      auto it = b_.find(c);
      if (it == b_.end()) fail(std::string("unbound letter ") + c);
      return Rational(it->second);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

const Template* find_template(const std::string& id) {
  for (const auto& t : templates())
    if (id == t.id) return &t;
  return nullptr;
}

}  // namespace

Rational eval_expression(const std::string& expr, const Bindings& b) {
  return Parser(expr, b).parse();
}

std::vector<std::string> catalog_matrix_ids() {
  std::vector<std::string> ids;
  for (const auto& t : templates()) ids.push_back(t.id);
  return ids;
}

bool has_catalog_matrix(const std::string& family_id) { return find_template(family_id) != nullptr; }

TransitionMatrix template_matrix(const std::string& family_id, const Bindings& b) {
  const Template* t = find_template(family_id);
  if (!t) throw std::invalid_argument("no matrix template for " + family_id);
  TransitionMatrix out;
  out.family = family_id;
  out.m = RationalMatrix(t->n);
  for (int i = 0; i < t->n; ++i) {
    auto cells = split_list(t->rows[i]);
    if (static_cast<int>(cells.size()) != t->n)
      throw std::logic_error("template " + family_id + " row " + std::to_string(i) + " has wrong width");
    for (int j = 0; j < t->n; ++j) out.m(i, j) = eval_expression(cells[j], b);
  }
  for (int i = 0; i < t->n; ++i) out.labels.push_back({FaceKind::Other, i + 1, "f" + std::to_string(i + 1)});
  if (*t->weights) {
    for (const auto& w : split_list(t->weights)) out.weights.push_back(eval_expression(w, b));
  } else {
    out.weights.assign(t->n, Rational(1));
  }
  return out;
}

// Root lookup: a root given by valence maps to the template key that is either
// that literal valence or a letter bound to it.
std::optional<std::vector<Rational>> template_v1(const std::string& family_id, const Bindings& b, int root) {
  const Template* t = find_template(family_id);
  if (!t) return std::nullopt;
  for (const auto& [key, vec] : t->v1) {
    std::string k = key;
    bool hit = false;
    if (std::isdigit(static_cast<unsigned char>(k[0]))) {
      hit = std::stoi(k) == root;
    } else {
      auto it = b.find(k[0]);
      hit = it != b.end() && it->second == root;
    }
    if (!hit) continue;
    std::vector<Rational> v;
    for (const auto& e : split_list(vec)) v.push_back(eval_expression(e, b));
    return v;
  }
  return std::nullopt;
}

std::vector<int> template_roots(const std::string& family_id, const Bindings& b) {
  std::vector<int> out;
  const Template* t = find_template(family_id);
  if (!t) return out;
  for (const auto& [key, vec] : t->v1) {
    (void)vec;
    if (std::isdigit(static_cast<unsigned char>(key[0]))) out.push_back(std::stoi(key));
    else if (b.count(key[0])) out.push_back(b.at(key[0]));
  }
  return out;
}

}  // namespace tg
