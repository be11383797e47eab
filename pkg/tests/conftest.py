import sys
from pathlib import Path

# Make the sibling oracles module importable regardless of pytest's
# import mode or invocation directory.
sys.path.insert(0, str(Path(__file__).resolve().parent))
