#!/usr/bin/env python3
"""
Setup script for the automatic-sequence transduction toolkit
Handles installation, configuration, and initial setup
"""

import subprocess
import sys
from pathlib import Path

from config import DEFAULT_CONFIG, save_config


def print_banner():
    """Print application banner"""
    print("🔁" + "=" * 58 + "🔁")
    print("🔁" + " " * 17 + "Automaton Transducer Kit" + " " * 17 + "🔁")
    print("🔁" + " " * 12 + "Transducing k-automatic sequences" + " " * 13 + "🔁")
    print("🔁" + "=" * 58 + "🔁")
    print()


def check_python_version():
    """Check if Python version is compatible"""
    version = sys.version_info
    if version.major < 3 or (version.major == 3 and version.minor < 8):
        print("❌ Python 3.8 or higher is required!")
        print(f"   Current version: {version.major}.{version.minor}.{version.micro}")
        return False

    print(f"✅ Python version: {version.major}.{version.minor}.{version.micro}")
    return True


def install_dependencies():
    """Install required dependencies"""
    print("📦 Installing dependencies...")

    try:
        subprocess.run([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"], check=True, capture_output=True)
        print("✅ Dependencies installed successfully!")
        return True

    except subprocess.CalledProcessError as e:
        print(f"❌ Failed to install dependencies: {e}")
        print("💡 Try running: pip install -r requirements.txt")
        return False


def create_directories(config):
    """Create the results and library directories"""
    directories = [
        config["output"]["results_dir"],
        config["library"]["automata_dir"],
        config["library"]["transducers_dir"],
        config["library"]["morphisms_dir"],
    ]

    print("📁 Creating directories...")
    for directory in directories:
        Path(directory).mkdir(parents=True, exist_ok=True)
        print(f"   ✅ {directory}/")


def create_config_file(path="config.json"):
    """Create default configuration file, keeping an existing one"""
    if Path(path).exists():
        print(f"⚠️  {path} already exists, leaving it unchanged")
        return
    save_config(DEFAULT_CONFIG, path)
    print(f"✅ Configuration file created: {path}")


def check_library():
    """Parse every shipped automaton, transducer and morphism"""
    print("🧪 Checking the shipped library...")
    from formats import parse_dfao, parse_morphism, parse_transducer

    parsers = {
        "automata_dir": parse_dfao,
        "transducers_dir": parse_transducer,
        "morphisms_dir": parse_morphism,
    }
    failures = 0
    for key, parse in parsers.items():
        for path in sorted(Path(DEFAULT_CONFIG["library"][key]).glob("*.txt")):
            try:
                parse(path.read_text())
                print(f"   ✅ {path}")
            except Exception as e:
                print(f"   ❌ {path}: {e}")
                failures += 1
    return failures == 0


def run_tests():
    """Run basic functionality tests"""
    print("🧪 Running basic tests...")

    tests_passed = 0
    total_tests = 2

    try:
        import library
        from dekking import transduce_dfao

        states = transduce_dfao(library.T, library.RUNSUM2).num_states
        if states != 8:
            raise AssertionError(f"expected 8 states, got {states}")
        print("   ✅ Running sum of Thue-Morse (8 states)")
        tests_passed += 1
    except Exception as e:
        print(f"   ❌ Transduction check failed: {e}")

    try:
        from extension import transduce_numeration

        ftmxor = transduce_numeration(library.FTM, library.XOR)
        prefix = "".join(map(str, ftmxor.outputs_prefix(20)))
        if prefix != "01001110110010100111":
            raise AssertionError(f"unexpected prefix {prefix}")
        print("   ✅ Fibonacci-Thue-Morse xor")
        tests_passed += 1
    except Exception as e:
        print(f"   ❌ Fibonacci transduction check failed: {e}")

    print(f"📊 Tests passed: {tests_passed}/{total_tests}")
    return tests_passed == total_tests


def print_usage_instructions():
    """Print usage instructions"""
    print("\n" + "=" * 60)
    print("🔁 Automaton Transducer Kit - Ready to Use! 🔁")
    print("=" * 60)
    print()
    print("🚀 Quick Start:")
    print("   python main.py transduce TSUM1 RUNSUM2 T    # running sum of Thue-Morse")
    print("   python main.py states TSUM1                 # 8")
    print("   python main.py eval FTM 20                  # first 20 terms")
    print()
    print("🖼️ Figures:")
    print("   python main.py fractal T RUNSUM2 512 512 --output results/fractal.png")
    print("   python main.py dot RUNSUM2 --output results/runsum2.dot")
    print()
    print("🔧 Troubleshooting:")
    print("   python main.py --check-deps                 # Check dependencies")
    print("   pytest -m 'not slow'                        # Quick test run")
    print()
    print("📖 Documentation:")
    print("   See README.md for detailed instructions")


def main():
    """Main setup function"""
    print_banner()

    if not check_python_version():
        sys.exit(1)

    if not install_dependencies():
        print("\n❌ Setup failed during dependency installation")
        sys.exit(1)

    create_directories(DEFAULT_CONFIG)
    create_config_file()

    library_ok = check_library()
    tests_ok = run_tests()

    if not tests_ok:
        print("\n⚠️  Some tests failed - check error messages above")

    print_usage_instructions()

    if library_ok and tests_ok:
        print("\n✅ Setup completed successfully!")
    else:
        print("\n⚠️  Setup completed with warnings")
        print("💡 Check the issues above before running the toolkit")


if __name__ == "__main__":
    main()
