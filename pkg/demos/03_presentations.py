# # Six presentations, checked relator by relator
#
# Each builder returns the generators and the relations as data.  The
# verifier pushes every relator through the free-group oracle; the
# abelianization is a Smith normal form over the integers.

# In[1]:

from convexbraid import abelianize, build, verify_presentation
from convexbraid.presentations import KINDS

n = 5
for kind in KINDS:
    p = build(kind, n)
    report = verify_presentation(p)
    print(f"{kind:15s} gens={len(p.generators):4d} rels={len(p.relations):5d} "
          f"failed={len(report.failed)} abelian={abelianize(p)}")


# The pure presentations all abelianize to Z^(n choose 2), one factor per pair
# of punctures.  The boundary version keeps the n swings around single
# punctures, which adds n more.

# In[2]:

p = build("swing", 3)
for rel in p.relations:
    print(f"{rel.tag:20s} {rel.lhs} = {rel.rhs}")
