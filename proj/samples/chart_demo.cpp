// Builds one chart, prints it, verifies it, then corrupts it and shows the
// checker catching the change.
//   chart_demo [odd-m|odd-0|even-m] [n] [s]      (default: odd-m 5 2)
#include <cstdlib>
#include <iostream>

#include "locmod/charts.hpp"

int main(int argc, char** argv) {
  using namespace locmod;
  try {
    const Family f = argc > 1 ? parse_family(argv[1]) : Family::OddM;
    const int n = argc > 2 ? std::atoi(argv[2]) : 5;
    const int s = argc > 3 ? std::atoi(argv[3]) : 2;
    const CaseId cid = CaseId::make(f, n, s);

    Chart ch = build_chart(cid);
    std::cout << cid.name() << ": " << ch.free_vars.size() << " free variables (rs = " << cid.r * cid.s << ")\n  ";
    for (const auto& v : ch.free_vars) std::cout << v << " ";
    std::cout << "\nF =\n" << ch.F.str() << "\n";

    auto rep = verify_chart(ch);
    for (const auto& c : rep.checks) std::cout << "  " << state_name(c.state) << "  " << c.name << "\n";
    std::cout << (rep.accepted() ? "accepted" : "rejected") << "\n\n";

    auto mu = mutate_chart(ch, 42);
    auto bad = verify_chart(ch);
    std::cout << "after corrupting " << mu.description << ":\n";
    for (const auto* c : bad.failures()) std::cout << "  Failed  " << c->name << "  " << c->witness << "\n";
    return rep.accepted() && !bad.accepted() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
