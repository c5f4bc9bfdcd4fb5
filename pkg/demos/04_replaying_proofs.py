# # Replaying a derivation
#
# A script starts from a known relation, applies explicit steps, and must end
# on the goal equation word for word.  In debug mode the oracle re-checks the
# equation after every step.

# In[1]:

from convexbraid.derivations import SCRIPTS, bundled, check_script

s = next(bundled("artin-4th-A4'-from-(3)", 4))
print("start:", s.start.lhs, "=", s.start.rhs)
for step in s.steps:
    what = step.factor if step.factor is not None else f"{step.relation.lhs} -> {step.relation.rhs}"
    print(f"  {step.mode:15s} {step.side:5s} {what}")
print("goal: ", s.goal)
print(check_script(s).line())


# Commutations are steps of their own.  The lantern script rearranges
# swings one adjacent swap at a time before folding them back into twists.

# In[2]:

s = next(bundled("lantern-implies-twist-factorization", 5))
print(s.binding, len(s.steps), "steps")
print(check_script(s).line())


# Every bundled script, every binding at n = 4:

# In[3]:

for name in SCRIPTS:
    reports = [check_script(x) for x in bundled(name, 4)]
    print(f"{name:40s} {sum(r.passed for r in reports)}/{len(reports)}")
