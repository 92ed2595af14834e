/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <nicesec/verify.hh>

#include <algorithm>
#include <iostream>
#include <thread>

using namespace nicesec;

auto main() -> int
{
    VerifyOptions options;
    options.extras = false;
    options.workers = int(std::clamp(std::thread::hardware_concurrency(), 1u, 4u));

    auto result = run_verification(options);
    int failed = 0;
    for (auto & claim : result.claims) {
        std::cout << format_claim(claim) << "\n";
        for (auto & w : claim.warnings)
            std::cout << "    warning: " << w << "\n";
        failed += claim.status != ClaimStatus::Pass;
    }
    std::cout << (result.claims.size() - failed) << " of " << result.claims.size() << " criteria pass\n";
    return failed == 0 && result.claims.size() == 10 ? 0 : 1;
}
