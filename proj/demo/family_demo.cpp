// Walks through the S(A) family: builds two members, checks that each is
// closed under substitution, and prints a word that tells them apart.

#include <iostream>

#include "termclone/termclone.hpp"

using namespace termclone;

int main() {
  const LengthSet a{{2, 4}};
  const LengthSet b{{2, 3}};
  const std::size_t m = 3;

  for (const LengthSet* s : {&a, &b}) {
    const CloneSet t = t_of(*s, m);
    std::cout << "T(" << to_string(*s) << ") in F_" << m << ": " << t.members.size() << " members, "
              << (t.closed ? "closed" : "NOT closed") << '\n';
    const CloneReport r = verify_family_closed(*s, m);
    std::cout << "  length invariance: " << (r.pass ? "pass" : "fail") << " (" << r.checked << " substitutions)\n";
  }

  if (auto w = distinguish(a, b, m))
    std::cout << "witness: " << to_string(*w) << " (length " << length(*w) << ")\n";

  // x*y*z = x*z*y and x*y*y = 0 in action
  for (const char* text : {"x1*x3*x2", "x1*x2*x3", "x1*x2*x2", "p*p*x1"})
    std::cout << text << "  =>  " << to_string(eval_term(parse_term(text))) << '\n';
}
