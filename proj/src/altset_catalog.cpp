#include "sl4/alternation.hpp"

namespace sl4 {

namespace {

// The 194 nonempty alternation sets realizable on the root lattice, as
// bitmasks over the canonical element indices. Pinned data; the enumeration
// suites re-derive the list by exhaustive window scans and must match it
// exactly.
constexpr std::uint32_t kCatalogMasks[194] = {
    0x000001u, // {1}
    0x000002u, // {s1}
    0x000004u, // {s2}
    0x000008u, // {s3}
    0x000010u, // {s1s2}
    0x000020u, // {s2s1}
    0x000040u, // {s2s3}
    0x000080u, // {s3s1}
    0x000100u, // {s3s2}
    0x000200u, // {s1s2s1}
    0x000400u, // {s1s2s3}
    0x000800u, // {s2s3s1}
    0x001000u, // {s2s3s2}
    0x002000u, // {s3s1s2}
    0x004000u, // {s3s2s1}
    0x008000u, // {s1s2s3s1}
    0x010000u, // {s1s2s3s2}
    0x020000u, // {s2s3s1s2}
    0x040000u, // {s2s3s2s1}
    0x080000u, // {s3s1s2s1}
    0x100000u, // {s1s2s3s1s2}
    0x200000u, // {s1s2s3s2s1}
    0x400000u, // {s2s3s1s2s1}
    0x800000u, // {s1s2s3s1s2s1}
    0x000003u, // {1,s1}
    0x000005u, // {1,s2}
    0x000009u, // {1,s3}
    0x000022u, // {s1,s2s1}
    0x000082u, // {s1,s3s1}
    0x000014u, // {s2,s1s2}
    0x000104u, // {s2,s3s2}
    0x000048u, // {s3,s2s3}
    0x000088u, // {s3,s3s1}
    0x000210u, // {s1s2,s1s2s1}
    0x002010u, // {s1s2,s3s1s2}
    0x000220u, // {s2s1,s1s2s1}
    0x004020u, // {s2s1,s3s2s1}
    0x000440u, // {s2s3,s1s2s3}
    0x001040u, // {s2s3,s2s3s2}
    0x000880u, // {s3s1,s2s3s1}
    0x001100u, // {s3s2,s2s3s2}
    0x002100u, // {s3s2,s3s1s2}
    0x080200u, // {s1s2s1,s3s1s2s1}
    0x008400u, // {s1s2s3,s1s2s3s1}
    0x010400u, // {s1s2s3,s1s2s3s2}
    0x008800u, // {s2s3s1,s1s2s3s1}
    0x040800u, // {s2s3s1,s2s3s2s1}
    0x011000u, // {s2s3s2,s1s2s3s2}
    0x022000u, // {s3s1s2,s2s3s1s2}
    0x044000u, // {s3s2s1,s2s3s2s1}
    0x084000u, // {s3s2s1,s3s1s2s1}
    0x208000u, // {s1s2s3s1,s1s2s3s2s1}
    0x110000u, // {s1s2s3s2,s1s2s3s1s2}
    0x120000u, // {s2s3s1s2,s1s2s3s1s2}
    0x420000u, // {s2s3s1s2,s2s3s1s2s1}
    0x240000u, // {s2s3s2s1,s1s2s3s2s1}
    0x480000u, // {s3s1s2s1,s2s3s1s2s1}
    0x900000u, // {s1s2s3s1s2,s1s2s3s1s2s1}
    0xa00000u, // {s1s2s3s2s1,s1s2s3s1s2s1}
    0xc00000u, // {s2s3s1s2s1,s1s2s3s1s2s1}
    0x000007u, // {1,s1,s2}
    0x000023u, // {1,s1,s2s1}
    0x00000du, // {1,s2,s3}
    0x000015u, // {1,s2,s1s2}
    0x000105u, // {1,s2,s3s2}
    0x000049u, // {1,s3,s2s3}
    0x0000a2u, // {s1,s2s1,s3s1}
    0x000222u, // {s1,s2s1,s1s2s1}
    0x004022u, // {s1,s2s1,s3s2s1}
    0x000882u, // {s1,s3s1,s2s3s1}
    0x000214u, // {s2,s1s2,s1s2s1}
    0x001104u, // {s2,s3s2,s2s3s2}
    0x0000c8u, // {s3,s2s3,s3s1}
    0x000448u, // {s3,s2s3,s1s2s3}
    0x001048u, // {s3,s2s3,s2s3s2}
    0x000888u, // {s3,s3s1,s2s3s1}
    0x000230u, // {s1s2,s2s1,s1s2s1}
    0x002210u, // {s1s2,s1s2s1,s3s1s2}
    0x080210u, // {s1s2,s1s2s1,s3s1s2s1}
    0x022010u, // {s1s2,s3s1s2,s2s3s1s2}
    0x044020u, // {s2s1,s3s2s1,s2s3s2s1}
    0x001140u, // {s2s3,s3s2,s2s3s2}
    0x008440u, // {s2s3,s1s2s3,s1s2s3s1}
    0x008880u, // {s3s1,s2s3s1,s1s2s3s1}
    0x040880u, // {s3s1,s2s3s1,s2s3s2s1}
    0x003100u, // {s3s2,s2s3s2,s3s1s2}
    0x011100u, // {s3s2,s2s3s2,s1s2s3s2}
    0x022100u, // {s3s2,s3s1s2,s2s3s1s2}
    0x480200u, // {s1s2s1,s3s1s2s1,s2s3s1s2s1}
    0x008c00u, // {s1s2s3,s2s3s1,s1s2s3s1}
    0x018400u, // {s1s2s3,s1s2s3s1,s1s2s3s2}
    0x208400u, // {s1s2s3,s1s2s3s1,s1s2s3s2s1}
    0x110400u, // {s1s2s3,s1s2s3s2,s1s2s3s1s2}
    0x044800u, // {s2s3s1,s3s2s1,s2s3s2s1}
    0x111000u, // {s2s3s2,s1s2s3s2,s1s2s3s1s2}
    0x122000u, // {s3s1s2,s2s3s1s2,s1s2s3s1s2}
    0x422000u, // {s3s1s2,s2s3s1s2,s2s3s1s2s1}
    0x0c4000u, // {s3s2s1,s2s3s2s1,s3s1s2s1}
    0x244000u, // {s3s2s1,s2s3s2s1,s1s2s3s2s1}
    0x484000u, // {s3s2s1,s3s1s2s1,s2s3s1s2s1}
    0xa08000u, // {s1s2s3s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0x130000u, // {s1s2s3s2,s2s3s1s2,s1s2s3s1s2}
    0x910000u, // {s1s2s3s2,s1s2s3s1s2,s1s2s3s1s2s1}
    0x4a0000u, // {s2s3s1s2,s3s1s2s1,s2s3s1s2s1}
    0xa40000u, // {s2s3s2s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0xc80000u, // {s3s1s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
    0xb00000u, // {s1s2s3s1s2,s1s2s3s2s1,s1s2s3s1s2s1}
    0xe00000u, // {s1s2s3s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
    0x000027u, // {1,s1,s2,s2s1}
    0x00008bu, // {1,s1,s3,s3s1}
    0x00004du, // {1,s2,s3,s2s3}
    0x000215u, // {1,s2,s1s2,s1s2s1}
    0x001105u, // {1,s2,s3s2,s2s3s2}
    0x000232u, // {s1,s1s2,s2s1,s1s2s1}
    0x0008a2u, // {s1,s2s1,s3s1,s2s3s1}
    0x044022u, // {s1,s2s1,s3s2s1,s2s3s2s1}
    0x002114u, // {s2,s1s2,s3s2,s3s1s2}
    0x0008c8u, // {s3,s2s3,s3s1,s2s3s1}
    0x001148u, // {s3,s2s3,s3s2,s2s3s2}
    0x008448u, // {s3,s2s3,s1s2s3,s1s2s3s1}
    0x022210u, // {s1s2,s1s2s1,s3s1s2,s2s3s1s2}
    0x480210u, // {s1s2,s1s2s1,s3s1s2s1,s2s3s1s2s1}
    0x084220u, // {s2s1,s1s2s1,s3s2s1,s3s1s2s1}
    0x011440u, // {s2s3,s1s2s3,s2s3s2,s1s2s3s2}
    0x008c80u, // {s3s1,s1s2s3,s2s3s1,s1s2s3s1}
    0x044880u, // {s3s1,s2s3s1,s3s2s1,s2s3s2s1}
    0x023100u, // {s3s2,s2s3s2,s3s1s2,s2s3s1s2}
    0x111100u, // {s3s2,s2s3s2,s1s2s3s2,s1s2s3s1s2}
    0x118400u, // {s1s2s3,s1s2s3s1,s1s2s3s2,s1s2s3s1s2}
    0xa08400u, // {s1s2s3,s1s2s3s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0x248800u, // {s2s3s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1}
    0x132000u, // {s3s1s2,s1s2s3s2,s2s3s1s2,s1s2s3s1s2}
    0x4a2000u, // {s3s1s2,s2s3s1s2,s3s1s2s1,s2s3s1s2s1}
    0x4c4000u, // {s3s2s1,s2s3s2s1,s3s1s2s1,s2s3s1s2s1}
    0xa44000u, // {s3s2s1,s2s3s2s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0xb10000u, // {s1s2s3s2,s1s2s3s1s2,s1s2s3s2s1,s1s2s3s1s2s1}
    0xd20000u, // {s2s3s1s2,s1s2s3s1s2,s2s3s1s2s1,s1s2s3s1s2s1}
    0xe80000u, // {s3s1s2s1,s1s2s3s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
    0x00008fu, // {1,s1,s2,s3,s3s1}
    0x0000abu, // {1,s1,s3,s2s1,s3s1}
    0x0000cbu, // {1,s1,s3,s2s3,s3s1}
    0x00088bu, // {1,s1,s3,s3s1,s2s3s1}
    0x002115u, // {1,s2,s1s2,s3s2,s3s1s2}
    0x084222u, // {s1,s2s1,s1s2s1,s3s2s1,s3s1s2s1}
    0x002314u, // {s2,s1s2,s3s2,s1s2s1,s3s1s2}
    0x003114u, // {s2,s1s2,s3s2,s2s3s2,s3s1s2}
    0x022114u, // {s2,s1s2,s3s2,s3s1s2,s2s3s1s2}
    0x011448u, // {s3,s2s3,s1s2s3,s2s3s2,s1s2s3s2}
    0x084230u, // {s1s2,s2s1,s1s2s1,s3s2s1,s3s1s2s1}
    0x0c4220u, // {s2s1,s1s2s1,s3s2s1,s2s3s2s1,s3s1s2s1}
    0x484220u, // {s2s1,s1s2s1,s3s2s1,s3s1s2s1,s2s3s1s2s1}
    0x011540u, // {s2s3,s3s2,s1s2s3,s2s3s2,s1s2s3s2}
    0x019440u, // {s2s3,s1s2s3,s2s3s2,s1s2s3s1,s1s2s3s2}
    0x111440u, // {s2s3,s1s2s3,s2s3s2,s1s2s3s2,s1s2s3s1s2}
    0x248880u, // {s3s1,s2s3s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1}
    0x248c00u, // {s1s2s3,s2s3s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1}
    0x24c800u, // {s2s3s1,s3s2s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1}
    0xa48800u, // {s2s3s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0xd22000u, // {s3s1s2,s2s3s1s2,s1s2s3s1s2,s2s3s1s2s1,s1s2s3s1s2s1}
    0xd30000u, // {s1s2s3s2,s2s3s1s2,s1s2s3s1s2,s2s3s1s2s1,s1s2s3s1s2s1}
    0xda0000u, // {s2s3s1s2,s3s1s2s1,s1s2s3s1s2,s2s3s1s2s1,s1s2s3s1s2s1}
    0xf20000u, // {s2s3s1s2,s1s2s3s1s2,s1s2s3s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
    0x0000afu, // {1,s1,s2,s3,s2s1,s3s1}
    0x0000cfu, // {1,s1,s2,s3,s2s3,s3s1}
    0x000237u, // {1,s1,s2,s1s2,s2s1,s1s2s1}
    0x0008abu, // {1,s1,s3,s2s1,s3s1,s2s3s1}
    0x0008cbu, // {1,s1,s3,s2s3,s3s1,s2s3s1}
    0x00114du, // {1,s2,s3,s2s3,s3s2,s2s3s2}
    0x002315u, // {1,s2,s1s2,s3s2,s1s2s1,s3s1s2}
    0x003115u, // {1,s2,s1s2,s3s2,s2s3s2,s3s1s2}
    0x084232u, // {s1,s1s2,s2s1,s1s2s1,s3s2s1,s3s1s2s1}
    0x0448a2u, // {s1,s2s1,s3s1,s2s3s1,s3s2s1,s2s3s2s1}
    0x0c4222u, // {s1,s2s1,s1s2s1,s3s2s1,s2s3s2s1,s3s1s2s1}
    0x022314u, // {s2,s1s2,s3s2,s1s2s1,s3s1s2,s2s3s1s2}
    0x023114u, // {s2,s1s2,s3s2,s2s3s2,s3s1s2,s2s3s1s2}
    0x008cc8u, // {s3,s2s3,s3s1,s1s2s3,s2s3s1,s1s2s3s1}
    0x011548u, // {s3,s2s3,s3s2,s1s2s3,s2s3s2,s1s2s3s2}
    0x019448u, // {s3,s2s3,s1s2s3,s2s3s2,s1s2s3s1,s1s2s3s2}
    0x484230u, // {s1s2,s2s1,s1s2s1,s3s2s1,s3s1s2s1,s2s3s1s2s1}
    0x4a2210u, // {s1s2,s1s2s1,s3s1s2,s2s3s1s2,s3s1s2s1,s2s3s1s2s1}
    0x4c4220u, // {s2s1,s1s2s1,s3s2s1,s2s3s2s1,s3s1s2s1,s2s3s1s2s1}
    0x111540u, // {s2s3,s3s2,s1s2s3,s2s3s2,s1s2s3s2,s1s2s3s1s2}
    0x119440u, // {s2s3,s1s2s3,s2s3s2,s1s2s3s1,s1s2s3s2,s1s2s3s1s2}
    0x248c80u, // {s3s1,s1s2s3,s2s3s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1}
    0x24c880u, // {s3s1,s2s3s1,s3s2s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1}
    0x133100u, // {s3s2,s2s3s2,s3s1s2,s1s2s3s2,s2s3s1s2,s1s2s3s1s2}
    0xa48c00u, // {s1s2s3,s2s3s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0xb18400u, // {s1s2s3,s1s2s3s1,s1s2s3s2,s1s2s3s1s2,s1s2s3s2s1,s1s2s3s1s2s1}
    0xa4c800u, // {s2s3s1,s3s2s1,s1s2s3s1,s2s3s2s1,s1s2s3s2s1,s1s2s3s1s2s1}
    0xd32000u, // {s3s1s2,s1s2s3s2,s2s3s1s2,s1s2s3s1s2,s2s3s1s2s1,s1s2s3s1s2s1}
    0xda2000u, // {s3s1s2,s2s3s1s2,s3s1s2s1,s1s2s3s1s2,s2s3s1s2s1,s1s2s3s1s2s1}
    0xec4000u, // {s3s2s1,s2s3s2s1,s3s1s2s1,s1s2s3s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
    0xf30000u, // {s1s2s3s2,s2s3s1s2,s1s2s3s1s2,s1s2s3s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
    0xfa0000u, // {s2s3s1s2,s3s1s2s1,s1s2s3s1s2,s1s2s3s2s1,s2s3s1s2s1,s1s2s3s1s2s1}
};

} // namespace

const std::vector<AltSet>& altset_catalog() {
    static const std::vector<AltSet> catalog = [] {
        std::vector<AltSet> v;
        v.reserve(194);
        for (std::uint32_t mask : kCatalogMasks) v.push_back(AltSet{mask});
        return v;
    }();
    return catalog;
}

} // namespace sl4
