#!/usr/bin/env python3
# Copyright 2026 The Numen Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates core/src/unicode_tables.cpp from Python's unicodedata.

Word characters are general categories L* and Nd. Lowercasing uses the
simple (single code point) mapping.
"""

LICENSE_HEADER = """\
// Copyright 2026 The Numen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

"""

import sys
import unicodedata

MAX_CP = 0x10FFFF


def is_word(cp):
    cat = unicodedata.category(chr(cp))
    return cat[0] == "L" or cat == "Nd"


def simple_lower(cp):
    if cp == 0x0130:  # LATIN CAPITAL LETTER I WITH DOT ABOVE
        return 0x0069
    lowered = chr(cp).lower()
    if len(lowered) == 1 and ord(lowered) != cp:
        return ord(lowered)
    return None


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP + 2):
        inside = cp <= MAX_CP and not (0xD800 <= cp <= 0xDFFF) and pred(cp)
        if inside and start is None:
            start = cp
        elif not inside and start is not None:
            out.append((start, cp - 1))
            start = None
    return out


def main(path):
    word = ranges(is_word)
    lower = [(cp, simple_lower(cp)) for cp in range(MAX_CP + 1)
             if not (0xD800 <= cp <= 0xDFFF) and simple_lower(cp) is not None]
    with open(path, "w", encoding="utf-8") as f:
        f.write(LICENSE_HEADER)
        f.write("// Generated by tools/gen_unicode_tables.py from Unicode %s. Do not edit.\n\n"
                % unicodedata.unidata_version)
        f.write('#include "unicode_tables.hpp"\n\nnamespace numen::detail {\n\n')
        f.write("const CodepointRange kWordRanges[] = {\n")
        for lo, hi in word:
            f.write("    {0x%X, 0x%X},\n" % (lo, hi))
        f.write("};\nconst std::size_t kWordRangeCount = sizeof(kWordRanges) / sizeof(kWordRanges[0]);\n\n")
        f.write("const CaseMapping kLowerMappings[] = {\n")
        for cp, lo in lower:
            f.write("    {0x%X, 0x%X},\n" % (cp, lo))
        f.write("};\nconst std::size_t kLowerMappingCount = sizeof(kLowerMappings) / sizeof(kLowerMappings[0]);\n\n")
        f.write("}  // namespace numen::detail\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "core/src/unicode_tables.cpp")
