#include <cstdio>
#include <cstring>

#include "ospl/verify.hpp"

int main(int argc, char** argv) {
    ospl::VerifyOptions opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--serial") == 0) opts.parallel = false;
    bool ok = true;
    for (const auto& r : ospl::verify_all(opts)) {
        std::printf("criterion %2d: %s  %s  (%s; %.1fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
