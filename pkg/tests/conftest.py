import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import settings

# first calls build shared sieve and gcd tables
settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")
