"""
=============================================
Sections of ZQ as braids
=============================================

Reflecting a section at a sink or a source multiplies its braid by a
generator or its inverse; the result does not depend on the path taken.
"""

# %%

from siltlab import QuiverA, normal_form
from siltlab.braid import braid_images, format_word, parse_word, section_algebra, section_to_silting

Q = QuiverA.parse("a2")
images = braid_images(Q, 5)
alg = section_algebra(Q)
for S, b in sorted(images.items(), key=lambda kv: kv[0].offsets):
    print(f"{str(S.offsets):10s} {section_to_silting(Q, S).labels(alg)}  {str(b):18s} {format_word(b.word())}")

# %%
# Normal forms decide equality of words.

print(normal_form(parse_word("b1 b2 b1 B2 B1 B2", 3), 3))
print(normal_form(parse_word("b1 b2 b1 b2 b1 b2", 3), 3))

# %%
# A_3 in every orientation: no section gets two different braids.

for spec in ("a3:FF", "a3:FB", "a3:BF", "a3:BB"):
    print(spec, len(braid_images(QuiverA.parse(spec), 6)), "sections")
