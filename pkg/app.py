"""hexforce command-line entry point"""
import sys

from dotenv import load_dotenv

from hexforce.cli import main

load_dotenv()


if __name__ == "__main__":
    sys.exit(main())
