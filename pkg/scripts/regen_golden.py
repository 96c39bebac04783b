from pathlib import Path
import sys

# Ensure project root is on sys.path
current_dir = Path(__file__).resolve().parent
project_root = current_dir.parent

if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

try:
    from core_algebra.engine.demo import DemoRunner, render_report
    from shared_utils.config_loader import get_settings
except ImportError:
    print("Error: Could not import project modules. Run this from the project root.")
    sys.exit(1)

GOLDEN_PATH = project_root / "tests" / "golden" / "demo_report.txt"


def regen_golden() -> int:
    """
    Rewrite the demo golden file from the current library.

    Refuses to write a report with failing cases; a failing case means the
    library changed, not the golden file.
    """
    report = DemoRunner(settings=get_settings()).run()
    if not report.all_passed:
        failed = [c.name for c in report.cases if not c.passed]
        print(f"Refusing to write golden file, failing cases: {', '.join(failed)}")
        return 1

    text = render_report(report) + "\n"
    if GOLDEN_PATH.exists() and GOLDEN_PATH.read_text(encoding="utf-8") == text:
        print(f"{GOLDEN_PATH} is up to date.")
        return 0

    GOLDEN_PATH.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN_PATH.write_text(text, encoding="utf-8")
    print(f"Wrote {len(report.cases)} cases to {GOLDEN_PATH}")
    return 0


if __name__ == "__main__":
    sys.exit(regen_golden())
